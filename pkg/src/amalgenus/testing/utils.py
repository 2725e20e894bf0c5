# coding=UTF-8
"""File digests for checking that reports are reproduced byte for byte."""
import hashlib
import logging
import os

LOGGER = logging.getLogger(__name__)


def digest_file_list(filepath_list, ifdir='skip'):
    """Create a single MD5sum from all the files in ``filepath_list``.

    The list is sorted first and the result is an MD5sum of the per-file
    MD5sums, so a one-file list does not digest to that file's MD5sum.

    Parameters:
        filepath_list (list of strings): files to digest.
        ifdir (string): 'skip' logs and skips directories, 'raise' raises.

    Returns:
        A hex MD5sum string.

    Raises:
        IOError: if a directory is listed and ``ifdir == 'raise'``.

    """
    summary_md5 = hashlib.md5()
    for filepath in sorted(filepath_list):
        if os.path.isdir(filepath):
            message = 'Skipping md5sum for directory %s' % filepath
            if ifdir == 'skip':
                LOGGER.warning(message)
                continue
            raise IOError(message)
        summary_md5.update(digest_file(filepath).encode('utf-8'))
    return summary_md5.hexdigest()


def digest_folder(folder):
    """Create a single MD5sum from every file below ``folder``."""
    file_list = []
    for path, _, files in os.walk(folder):
        for name in files:
            file_list.append(os.path.join(path, name))
    return digest_file_list(file_list)


def digest_file(filepath):
    """Return the MD5sum of one file, read in blocks."""
    block_size = 2 ** 20
    file_md5 = hashlib.md5()
    with open(filepath, 'rb') as file_handler:
        for chunk in iter(lambda: file_handler.read(block_size), b''):
            file_md5.update(chunk)
    return file_md5.hexdigest()
