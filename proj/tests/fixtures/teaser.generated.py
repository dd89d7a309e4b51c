import json

from torch.utils.data import Dataset


class PyTorchDataset(Dataset):
    def __init__(self):
        self.items = []
    def __len__(self):
        return len(self.items)
    def __getitem__(self, index):
        return self.items[index]
    def loader(self):
        with open(self.path) as f:
            self.items = json.load(f)
