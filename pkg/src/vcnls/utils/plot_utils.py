# src/vcnls/utils/plot_utils.py

import logging
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import pandas as pd  # noqa: E402

logger = logging.getLogger(__name__)


def plot_blowup_rates(
    scan_df: pd.DataFrame, output_dir: str = "data/plots", filename: str = "blowup_rates.png"
) -> str:
    """
    Plots ||psi_eps||_p and ||psi_eps||_inf against eps on log-log axes, one line per p.

    Args:
        scan_df (pd.DataFrame): Blow-up scan table.
                                Expected columns: 'eps', 'p', 'lp_norm', 'linf_norm'.
        output_dir (str): Directory to save the plot.
        filename (str): Name of the file to save the plot.

    Returns:
        str: Path of the written PNG.
    """
    if not isinstance(scan_df, pd.DataFrame):
        raise TypeError("scan_df must be a pandas DataFrame.")
    if not all(col in scan_df.columns for col in ["eps", "p", "lp_norm", "linf_norm"]):
        raise ValueError("scan_df must contain 'eps', 'p', 'lp_norm', 'linf_norm' columns.")

    os.makedirs(output_dir, exist_ok=True)
    output_filepath = os.path.join(output_dir, filename)

    plt.figure(figsize=(10, 6))
    for p in sorted(scan_df["p"].unique()):
        rows = scan_df[scan_df["p"] == p].sort_values(by="eps")
        plt.plot(rows["eps"], rows["lp_norm"], marker="o", linestyle="-", label=f"L_{p:g}")
    linf = scan_df.drop_duplicates(subset="eps").sort_values(by="eps")
    plt.plot(linf["eps"], linf["linf_norm"], marker="s", linestyle="--", label="L_inf")

    plt.xscale("log")
    plt.yscale("log")
    plt.xlabel("eps")
    plt.ylabel("norm")
    plt.title("Norm growth of psi_eps as eps -> 0")
    plt.legend()
    plt.grid(True, which="both", ls="--", c="0.7")
    plt.tight_layout()

    plt.savefig(output_filepath)
    logger.info("Blow-up rate plot saved to: %s", output_filepath)
    plt.close()
    return output_filepath


def plot_norm_series(
    norm_df: pd.DataFrame, output_dir: str = "data/plots", filename: str = "norm_series.png"
) -> str:
    """
    Plots simulated on-domain norms against time, with the exact norms dashed when present.

    Args:
        norm_df (pd.DataFrame): Expected columns: 't', 'p', 'norm', 'exact_norm'.
        output_dir (str): Directory to save the plot.
        filename (str): Name of the file to save the plot.

    Returns:
        str: Path of the written PNG.
    """
    if not isinstance(norm_df, pd.DataFrame):
        raise TypeError("norm_df must be a pandas DataFrame.")
    if not all(col in norm_df.columns for col in ["t", "p", "norm", "exact_norm"]):
        raise ValueError("norm_df must contain 't', 'p', 'norm', 'exact_norm' columns.")

    os.makedirs(output_dir, exist_ok=True)
    output_filepath = os.path.join(output_dir, filename)

    plt.figure(figsize=(10, 6))
    for p in sorted(norm_df["p"].unique()):
        rows = norm_df[norm_df["p"] == p].sort_values(by="t")
        plt.plot(rows["t"], rows["norm"], marker="o", linestyle="-", label=f"simulated L_{p:g}")
        if rows["exact_norm"].notna().any():
            plt.plot(rows["t"], rows["exact_norm"], linestyle="--", label=f"exact L_{p:g}")

    plt.xlabel("t")
    plt.ylabel("on-domain norm")
    plt.title("Tracked norms")
    plt.legend()
    plt.grid(True, ls="--", c="0.7")
    plt.tight_layout()

    plt.savefig(output_filepath)
    logger.info("Norm series plot saved to: %s", output_filepath)
    plt.close()
    return output_filepath
