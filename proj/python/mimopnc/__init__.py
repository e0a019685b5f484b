from ._mimopnc import (
    BerRecord,
    ConfigError,
    DegenerateChannel,
    DetectorId,
    InvalidCoefficient,
    Mat2,
    NoCrossing,
    QrFactors,
    SimConfig,
    Vec2,
    apply_qh,
    compute_k,
    detect,
    detector_name,
    estimate_gap_db,
    pnc_map,
    qr_decompose,
    read_csv,
    run_point,
    run_sweep,
    snr_to_sigma,
    swap_columns,
    write_csv,
)

__all__ = [
    "BerRecord",
    "ConfigError",
    "DegenerateChannel",
    "DetectorId",
    "InvalidCoefficient",
    "Mat2",
    "NoCrossing",
    "QrFactors",
    "SimConfig",
    "Vec2",
    "apply_qh",
    "compute_k",
    "detect",
    "detector_name",
    "estimate_gap_db",
    "pnc_map",
    "qr_decompose",
    "read_csv",
    "run_point",
    "run_sweep",
    "snr_to_sigma",
    "swap_columns",
    "write_csv",
]
