//! Text input, reports and graph rendering.

mod dot;
mod parse;
mod report;

pub use dot::{graph_dot, tree_dot};
pub use parse::{parse_poly, parse_system, InputSystem, ParseError};
pub use report::{
    analysis_report, compare_report, input_summary, render_analysis, AnalysisReport, CompareReport, CompareRow,
    ReportOptions, SCHEMA, SCHEMA_VERSION,
};
