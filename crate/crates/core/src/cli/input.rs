//! Parsing of sequence and tree documents.

use std::fmt;

use serde_json::Value;

use crate::sequence::LengthSeq;
use crate::tree::{BinTree, TreeBuilder};

/// Largest path length accepted on input.
pub const VALUE_CAP: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
}

impl ParseError {
    fn new(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
        }
    }

    fn at(line: usize, column: usize, message: impl fmt::Display) -> Self {
        ParseError::new(format!("line {line}, column {column}: {message}"))
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error: {}", self.message)
    }
}

impl std::error::Error for ParseError {}

/// A sequence document: either `{"lengths": [..]}` or plain text of
/// non-negative integers separated by whitespace or commas, with `#`
/// starting a comment that runs to the end of the line.
pub fn parse_sequence(text: &str) -> Result<LengthSeq, ParseError> {
    let values = if text.trim_start().starts_with('{') {
        parse_sequence_json(text)?
    } else {
        parse_sequence_text(text)?
    };
    LengthSeq::new(values).map_err(|_| ParseError::new("empty sequence (need at least one value)"))
}

fn parse_sequence_text(text: &str) -> Result<Vec<u32>, ParseError> {
    let mut values = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let mut token_start: Option<(usize, usize)> = None; // (byte offset, column)
        let mut column = 0;
        for (offset, ch) in body
            .char_indices()
            .chain(std::iter::once((body.len(), ' ')))
        {
            column += 1;
            let separator = ch.is_whitespace() || ch == ',';
            match (separator, token_start) {
                (false, None) => token_start = Some((offset, column)),
                (true, Some((start, start_col))) => {
                    values.push(parse_value(&body[start..offset], line_no + 1, start_col)?);
                    token_start = None;
                }
                _ => {}
            }
        }
    }
    Ok(values)
}

fn parse_value(token: &str, line: usize, column: usize) -> Result<u32, ParseError> {
    let value: u64 = if token.bytes().all(|b| b.is_ascii_digit()) {
        // All digits: only overflow can fail, and that is over the cap anyway.
        token.parse().unwrap_or(u64::MAX)
    } else {
        return Err(ParseError::at(
            line,
            column,
            format!("expected a non-negative integer, found '{token}'"),
        ));
    };
    if value > VALUE_CAP {
        return Err(ParseError::at(
            line,
            column,
            format!("value {token} exceeds the cap of {VALUE_CAP}"),
        ));
    }
    Ok(value as u32)
}

fn parse_sequence_json(text: &str) -> Result<Vec<u32>, ParseError> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| ParseError::new(format!("invalid JSON: {e}")))?;
    let lengths = doc
        .get("lengths")
        .and_then(Value::as_array)
        .ok_or_else(|| ParseError::new("JSON document needs an array under \"lengths\""))?;
    lengths
        .iter()
        .enumerate()
        .map(|(i, v)| match v.as_u64() {
            Some(x) if x <= VALUE_CAP => Ok(x as u32),
            Some(x) => Err(ParseError::new(format!(
                "lengths[{i}]: value {x} exceeds the cap of {VALUE_CAP}"
            ))),
            None => Err(ParseError::new(format!(
                "lengths[{i}]: expected a non-negative integer, found {v}"
            ))),
        })
        .collect()
}

/// A tree document: `{"leaf": k}` or `{"left": .., "right": ..}`, where the
/// leaf numbers must read `1, 2, ..., n` from left to right.
pub fn parse_tree(text: &str) -> Result<BinTree, ParseError> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| ParseError::new(format!("invalid JSON: {e}")))?;
    let mut builder = TreeBuilder::new();
    let mut next_leaf = 1u64;
    let mut stack: Vec<(&Value, usize, String)> = vec![(&doc, builder.root(), String::new())];
    while let Some((value, at, path)) = stack.pop() {
        let node_name = if path.is_empty() { "ε" } else { path.as_str() };
        let Some(object) = value.as_object() else {
            return Err(ParseError::new(format!(
                "tree node {node_name}: expected an object, found {value}"
            )));
        };
        let mut keys: Vec<&str> = object.keys().map(String::as_str).collect();
        keys.sort_unstable();
        match keys.as_slice() {
            ["leaf"] => {
                let k = object["leaf"].as_u64();
                if k != Some(next_leaf) {
                    return Err(ParseError::new(format!(
                        "tree node {node_name}: expected leaf {next_leaf}, found {}",
                        object["leaf"]
                    )));
                }
                next_leaf += 1;
            }
            ["left", "right"] => {
                let children = builder.grow_perfect(at, 1);
                stack.push((&object["right"], children[1], format!("{path}1")));
                stack.push((&object["left"], children[0], format!("{path}0")));
            }
            _ => {
                return Err(ParseError::new(format!(
                    "tree node {node_name}: expected {{\"leaf\": k}} or {{\"left\": .., \"right\": ..}}, found keys {keys:?}"
                )))
            }
        }
    }
    Ok(builder.finish())
}
