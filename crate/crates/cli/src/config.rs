//! Config files: UTF-8, one `key=value` per line, keys named like the long
//! flags. Blank lines and lines starting with `#` are ignored. Flags given on
//! the command line override the file.

use std::path::Path;

use crate::{usage, Result};

/// Turns config lines into `--key value` arguments (`key=true` becomes a
/// bare `--key`; `key=false` is dropped).
pub fn config_args(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return usage(format!("config line {}: expected key=value", i + 1));
        };
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || key == "config" {
            return usage(format!("config line {}: invalid key {key:?}", i + 1));
        }
        match value {
            "true" => out.push(format!("--{key}")),
            "false" => {}
            _ => {
                out.push(format!("--{key}"));
                out.push(value.to_string());
            }
        }
    }
    Ok(out)
}

/// Splices the contents of `--config <path>` into `argv` right after the
/// subcommand, so explicit flags (which come later) win.
pub fn expand_config(argv: Vec<String>) -> Result<Vec<String>> {
    let mut path = None;
    let mut rest = Vec::with_capacity(argv.len());
    let mut it = argv.into_iter();
    while let Some(arg) = it.next() {
        if arg == "--config" {
            match it.next() {
                Some(p) => path = Some(p),
                None => return usage("--config needs a path"),
            }
        } else if let Some(p) = arg.strip_prefix("--config=") {
            path = Some(p.to_string());
        } else {
            rest.push(arg);
        }
    }
    let Some(path) = path else {
        return Ok(rest);
    };
    let text = std::fs::read_to_string(Path::new(&path))
        .map_err(|e| crate::CliError::Usage(format!("cannot read config {path}: {e}")))?;
    let extra = config_args(&text)?;
    // argv[0] is the binary, argv[1] the subcommand.
    let at = rest.len().min(2);
    rest.splice(at..at, extra);
    Ok(rest)
}
