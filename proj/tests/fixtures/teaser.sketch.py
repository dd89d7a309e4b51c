class PyTorchDataset(Dataset):
    def __init__(self):
        ...  # init
    def __len__(self):
        ...  # length
    def __getitem__(self, index):
        ...  # item
    def loader(self):
        reads(json)
