//! Files in and out: `x,value` CSV signals, tagged JSON reports and SVG figures.

mod csv;
mod figures;
mod json;
mod svg;

pub use self::csv::{
    read_csv, read_signal_csv, write_csv, write_signal_csv, CSV_HEADER, SPACING_TOLERANCE,
};
pub use figures::{
    build_figure, figure_1, figure_2, figure_3, FIGURE_HALF_SPAN, FIGURE_STEP, KERNEL_CLIP,
};
pub use json::{
    digest_bytes, digest_signal, from_json_str, read_report_json, to_json_string,
    write_report_json, BedrosianReport, HilbertRun, Method, PartitionReport, Report,
    ReportEnvelope, TOOL_VERSION,
};
pub use svg::{render_figure, write_figure, Curve, FigureSpec, Panel, Role};
