//! Argument decoding: scheme sources, rational lists, chain entries.

use std::io::Read;

use grdiff_core::rational::parse_rational_list;
use grdiff_core::{named_scheme, parse_rational, ChainEntry, ChainItem, FamilyKind, Rational, Scheme};

use crate::CliError;

fn read_source(arg: &str) -> Result<String, CliError> {
    if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
    } else if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        Ok(arg.to_string())
    }
}

fn from_text(text: &str) -> Result<Vec<Scheme>, CliError> {
    let text = text.trim();
    if text.starts_with('{') {
        return Ok(vec![Scheme::from_json(text)?]);
    }
    if text.starts_with('[') {
        return serde_json::from_str::<Vec<Scheme>>(text)
            .map_err(|e| CliError::Input(format!("scheme list: {e}")));
    }
    let kind: FamilyKind = text.parse()?;
    Ok(vec![named_scheme(&kind)?])
}

/// A scheme given as `@file`, `-` (stdin), inline JSON or a family string.
pub fn scheme(arg: &str) -> Result<Scheme, CliError> {
    let mut all = from_text(&read_source(arg)?)?;
    if all.len() != 1 {
        return Err(CliError::Input(format!("expected one scheme, found {}", all.len())));
    }
    Ok(all.remove(0))
}

/// Like [`scheme`], but a JSON array yields several schemes.
pub fn schemes(arg: &str) -> Result<Vec<Scheme>, CliError> {
    from_text(&read_source(arg)?)
}

pub fn rational(arg: &str) -> Result<Rational, CliError> {
    Ok(parse_rational(arg)?)
}

pub fn rationals(arg: &str) -> Result<Vec<Rational>, CliError> {
    Ok(parse_rational_list(arg)?)
}

/// `ORDER=cont` or `ORDER=<scheme>`.
pub fn chain_entry(arg: &str) -> Result<ChainEntry, CliError> {
    let (order, item) = arg
        .split_once('=')
        .ok_or_else(|| CliError::Input(format!("chain entry {arg:?}: expected ORDER=SCHEME")))?;
    let order: usize = order
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("chain entry {arg:?}: bad order")))?;
    match item.trim() {
        "cont" | "continuity" => Ok(ChainEntry {
            order,
            item: ChainItem::Continuity,
        }),
        other => Ok(ChainEntry::scheme(order, scheme(other)?)),
    }
}
