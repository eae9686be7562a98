//! Output configuration shared by all subcommands.

use crate::args::Format;

/// How values are rendered: plain text lines or one JSON document per
/// invocation.
#[derive(Debug, Clone, Copy)]
pub struct OutputConfig {
    pub format: Format,
    pub digits: usize,
}

impl OutputConfig {
    pub fn is_json(&self) -> bool {
        matches!(self.format, Format::Json)
    }

    /// Prints the single JSON document for this invocation.
    pub fn emit_json(&self, value: &serde_json::Value) {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable value"));
    }
}
