use std::fs;
use std::io::{self, Read};
use std::path::Path;

use clap::ValueEnum;
use grover_core::graph::{from_edge_list, parse_graph6, Graph};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Graph6,
}

/// Reads a file, or standard input when `path` is `-`.
pub fn read_text(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("reading {}: {e}", path.display())))
    }
}

pub fn read_graph(path: &Path, format: InputFormat) -> Result<Graph, CliError> {
    let text = read_text(path)?;
    let parsed = match format {
        InputFormat::Edgelist => from_edge_list(&text),
        InputFormat::Graph6 => {
            let token = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
            parse_graph6(token)
        }
    };
    parsed.map_err(|e| CliError::Input(e.to_string()))
}
