//! Line-oriented textual automaton format.
//!
//! ```text
//! # comments run to end of line
//! alphabet: a b
//! states: q0 q1
//! start: q0
//! accept: q0
//! q0 a -> q1
//! q1 b -> q0
//! ```
//!
//! One transition per line. Repeating a `(state, symbol)` pair with a
//! different target makes the machine nondeterministic.

use thiserror::Error;

use crate::automaton::{validate_machine, Machine, RawDescription, ValidationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses text into a name-level description without validating references.
pub fn parse_raw(text: &str) -> Result<RawDescription, FormatError> {
    let mut raw = RawDescription::default();
    let mut seen_alphabet = false;
    let mut seen_states = false;
    let mut seen_accept = false;

    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = match line.find('#') {
            Some(at) => &line[..at],
            None => line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, rest)) = line.split_once(':') {
            let key = key.trim();
            let items: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            let once = |seen: &mut bool| {
                if std::mem::replace(seen, true) {
                    Err(syntax(lineno, format!("repeated `{key}:` line")))
                } else {
                    Ok(())
                }
            };
            match key {
                "alphabet" => {
                    once(&mut seen_alphabet)?;
                    raw.alphabet = items;
                }
                "states" => {
                    once(&mut seen_states)?;
                    raw.states = items;
                }
                "start" => {
                    if raw.start.is_some() {
                        return Err(syntax(lineno, "repeated `start:` line"));
                    }
                    match items.as_slice() {
                        [one] => raw.start = Some(one.clone()),
                        _ => return Err(syntax(lineno, "`start:` takes exactly one state")),
                    }
                }
                "accept" => {
                    once(&mut seen_accept)?;
                    raw.accept = items;
                }
                other => return Err(syntax(lineno, format!("unknown header `{other}`"))),
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [from, sym, "->", to] => {
                raw.transitions
                    .push((from.to_string(), sym.to_string(), to.to_string()));
            }
            _ => {
                return Err(syntax(
                    lineno,
                    "expected `<state> <symbol> -> <state>` or a header line",
                ))
            }
        }
    }
    if !seen_alphabet {
        return Err(syntax(0, "missing `alphabet:` line"));
    }
    if !seen_states {
        return Err(syntax(0, "missing `states:` line"));
    }
    Ok(raw)
}

/// Parses and validates. Returns [`Machine::Dfa`] unless some pair has two
/// or more targets.
pub fn parse_automaton(text: &str) -> Result<Machine, FormatError> {
    let raw = parse_raw(text)?;
    Ok(validate_machine(&raw)?)
}

/// Canonical text form: header lines then transitions in
/// `(state, symbol, target)` id order.
pub fn serialize(machine: &Machine) -> String {
    write_raw(&machine.to_raw())
}

pub fn write_raw(raw: &RawDescription) -> String {
    let mut out = String::new();
    let line = |out: &mut String, key: &str, items: &[String]| {
        out.push_str(key);
        out.push(':');
        for it in items {
            out.push(' ');
            out.push_str(it);
        }
        out.push('\n');
    };
    line(&mut out, "alphabet", &raw.alphabet);
    line(&mut out, "states", &raw.states);
    if let Some(start) = &raw.start {
        out.push_str("start: ");
        out.push_str(start);
        out.push('\n');
    }
    line(&mut out, "accept", &raw.accept);
    for (from, sym, to) in &raw.transitions {
        out.push_str(&format!("{from} {sym} -> {to}\n"));
    }
    out
}
