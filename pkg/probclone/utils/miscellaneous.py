import errno
import os


def mkdir(path):
    if not path:
        return
    try:
        os.makedirs(path)
    except OSError as e:
        if e.errno != errno.EEXIST:
            raise


def parent_dir(file_path):
    return os.path.dirname(os.path.abspath(file_path))
