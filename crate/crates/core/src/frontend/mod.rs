//! Text input, JSON reports and the command line.

pub mod cli;
mod parse;
pub mod report;

pub use parse::{
    emit, load, parse, parse_assignments, parse_module_spec, parse_path, parse_scalar, ArrowDecl, Diagnostic, ModuleSpec,
    Options, Pos, RelationSpec, SourceSpec, TermSpec,
};
pub use report::{emit_report, PATH_ORDER};

#[cfg(test)]
mod tests;
