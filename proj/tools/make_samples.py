"""Regenerates the sample datasets under data/."""

import pathlib

import numpy as np

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def write_tsv(path, rows):
    with open(path, "w", newline="\n") as f:
        for label, values in rows:
            f.write("\t".join([label] + [repr(float(v)) for v in values]) + "\n")


def square_wave(rng, n=1000, run=50, sigma=0.5):
    levels = np.where((np.arange(n) // run) % 2 == 0, 0.0, 10.0)
    return levels + rng.normal(0.0, sigma, n)


def three_level_comparison():
    # 35 blocks of low (0) followed by mid (10); 11 short high (20) runs
    # sit in the middle of every third mid block.
    blocks, low_total, high_total, high_runs = 35, 530, 28, 11
    mid_total = 1000 - low_total
    out, run = [], 0
    for b in range(blocks):
        low = low_total // blocks + (b < low_total % blocks)
        mid = mid_total // blocks + (b < mid_total % blocks)
        high = 0
        if run < high_runs and b == run * (blocks // high_runs) + 1:
            high = high_total // high_runs + (run < high_total % high_runs)
            run += 1
        before = (mid - high) // 2
        out += [0.0] * low + [10.0] * before + [20.0] * high + [10.0] * (mid - high - before)
    return out


def main():
    rng = np.random.default_rng(7)
    DATA.mkdir(exist_ok=True)
    write_tsv(DATA / "square_wave.tsv", [("1", square_wave(rng))])
    write_tsv(DATA / "three_level.tsv", [("1", three_level_comparison())])
    write_tsv(DATA / "constant.tsv", [("1", [3.0] * 20)])


if __name__ == "__main__":
    main()
