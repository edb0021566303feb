#!/usr/bin/env python3
"""Write a pair of decompressed MNIST IDX files for the smoke tests.

The 5000-sample MNIST subset bundled with mlxtend (500 images per class) is
re-encoded as t10k-images-idx3-ubyte / t10k-labels-idx1-ubyte, preserving the
subset's row order. Full MNIST files can be used instead by pointing
--data-dir at a directory holding the decompressed originals.
"""

import argparse
import gzip
import os
import struct
import sys


def load_mlxtend_rows():
    import mlxtend.data

    path = os.path.join(os.path.dirname(mlxtend.data.__file__), "data", "mnist_5k.csv.gz")
    images, labels = [], []
    with gzip.open(path, "rt") as fh:
        for line in fh:
            fields = [int(float(v)) for v in line.strip().split(",")]
            images.append(bytes(fields[:-1]))
            labels.append(fields[-1])
    return images, labels


def write_idx(out_dir, images, labels, rows=28, cols=28):
    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "t10k-images-idx3-ubyte"), "wb") as fh:
        fh.write(struct.pack(">IIII", 0x00000803, len(images), rows, cols))
        for img in images:
            assert len(img) == rows * cols
            fh.write(img)
    with open(os.path.join(out_dir, "t10k-labels-idx1-ubyte"), "wb") as fh:
        fh.write(struct.pack(">II", 0x00000801, len(labels)))
        fh.write(bytes(labels))


def main(argv):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out_dir")
    args = parser.parse_args(argv)
    try:
        images, labels = load_mlxtend_rows()
    except ImportError:
        print("mlxtend is not installed (pip install mlxtend)", file=sys.stderr)
        return 1
    write_idx(args.out_dir, images, labels)
    print(f"wrote {len(images)} images to {args.out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
