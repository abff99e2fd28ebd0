import os

from wirelength.evaluation import load_benchmarks
from wirelength.exceptions.notfound import NotFoundException


class BenchmarkDAO:
    """
    The constructor expects the directory holding the bundled benchmark
    CSV fixtures, one `<name>.csv` file per published benchmark set.
    """

    def __init__(self, data_dir):
        self.data_dir = data_dir

    """
    This method returns the names of the bundled benchmark sets, sorted.

    ['table1', 'table2']
    """

    def all(self):
        return sorted(
            os.path.splitext(entry)[0] for entry in os.listdir(self.data_dir)
            if entry.endswith(".csv"))

    """
    This method loads one benchmark set by name and returns its records.

    If no set has that name, a NotFoundException is raised.
    """

    def find(self, name):
        path = os.path.join(self.data_dir, f"{name}.csv")
        if not os.path.isfile(path):
            raise NotFoundException(name, self.all())

        with open(path, "rb") as source:
            return load_benchmarks(source)
