//! Text notations for box-ball states.
//!
//! Compact notation has one character per box of capacity one: a digit for
//! a ball, `_` or `e` for an empty box. With more than nine colors the boxes
//! are whitespace-separated tokens instead. An optional `@<label> ` prefix
//! gives the label of the first box (default 0).
//!
//! Walled notation lists boxes between `|` walls, e.g. `|ee5|e125|4|`. The
//! number of symbols in a box is its capacity. The first box is labelled 1
//! unless an `@<label> ` prefix says otherwise, and a trailing `+<d>` sets
//! the capacity of every unlisted box (default 1).

use std::fmt;
use std::str::FromStr;

use crate::bbs::{CapacityProfile, State};
use crate::error::{Error, Result};
use crate::{Color, Label};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Notation {
    #[default]
    Compact,
    Walled,
}

impl fmt::Display for Notation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Notation::Compact => "compact",
            Notation::Walled => "walled",
        })
    }
}

impl FromStr for Notation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "compact" => Ok(Notation::Compact),
            "walled" => Ok(Notation::Walled),
            _ => Err(Error::parse(0, format!("unknown notation {s:?}"))),
        }
    }
}

/// Which notation a text uses.
pub fn detect(text: &str) -> Notation {
    let body = text.trim_start();
    let body = match body.strip_prefix('@') {
        Some(rest) => rest.trim_start_matches(|c: char| c == '-' || c.is_ascii_digit()),
        None => body,
    };
    if body.trim_start().starts_with('|') {
        Notation::Walled
    } else {
        Notation::Compact
    }
}

/// Parses either notation. `colors` fixes `n`; when absent it is the
/// largest color present (at least 1).
pub fn parse_state(text: &str, colors: Option<Color>) -> Result<State> {
    let lead = text.len() - text.trim_start().len();
    let (first, body, at) = split_origin(text.trim_end(), lead)?;
    match detect(text) {
        Notation::Compact => parse_compact(body, at, first.unwrap_or(0), colors),
        Notation::Walled => parse_walled(body, at, first.unwrap_or(1), colors),
    }
}

fn split_origin(text: &str, lead: usize) -> Result<(Option<Label>, &str, usize)> {
    let trimmed = &text[lead.min(text.len())..];
    let Some(rest) = trimmed.strip_prefix('@') else {
        return Ok((None, trimmed, lead));
    };
    let digits = rest
        .find(|c: char| !(c == '-' || c.is_ascii_digit()))
        .unwrap_or(rest.len());
    let label = rest[..digits]
        .parse::<Label>()
        .map_err(|e| Error::parse(lead + 1, format!("bad label: {e}")))?;
    let after = &rest[digits..];
    let body = after.trim_start();
    let at = lead + 1 + digits + (after.len() - body.len());
    Ok((Some(label), body, at))
}

/// A ball or a vacancy symbol.
fn symbol(token: &str, pos: usize) -> Result<Option<Color>> {
    match token {
        "_" | "e" => Ok(None),
        _ => match token.parse::<Color>() {
            Ok(c) if c >= 1 => Ok(Some(c)),
            _ => Err(Error::parse(
                pos,
                format!("expected a color or `_`, found {token:?}"),
            )),
        },
    }
}

/// Splits into `(byte offset, token)` pairs: whitespace-separated tokens if
/// `spaced`, else single characters.
fn tokens(body: &str, spaced: bool) -> Vec<(usize, &str)> {
    if spaced {
        body.split_ascii_whitespace()
            .map(|t| (t.as_ptr() as usize - body.as_ptr() as usize, t))
            .collect()
    } else {
        body.char_indices()
            .map(|(i, c)| (i, &body[i..i + c.len_utf8()]))
            .collect()
    }
}

fn spaced(body: &str, colors: Option<Color>) -> bool {
    colors.is_some_and(|n| n > 9) || body.contains(char::is_whitespace)
}

fn finish(
    boxes: Vec<(Label, Vec<Color>)>,
    capacities: CapacityProfile,
    colors: Option<Color>,
    at: usize,
) -> Result<State> {
    let highest = boxes
        .iter()
        .flat_map(|(_, b)| b)
        .copied()
        .max()
        .unwrap_or(1);
    let n = colors.unwrap_or(highest);
    if highest > n {
        return Err(Error::parse(
            at,
            format!("color {highest} exceeds {n} colors"),
        ));
    }
    State::from_boxes(n, capacities, boxes)
}

fn parse_compact(body: &str, at: usize, first: Label, colors: Option<Color>) -> Result<State> {
    let mut boxes = Vec::new();
    for (label, (i, tok)) in (first..).zip(tokens(body, spaced(body, colors))) {
        if let Some(c) = symbol(tok, at + i)? {
            boxes.push((label, vec![c]));
        }
    }
    finish(boxes, CapacityProfile::unit(), colors, at)
}

fn parse_walled(body: &str, at: usize, first: Label, colors: Option<Color>) -> Result<State> {
    let (walls, default) = match body.rfind('+') {
        Some(plus) => {
            let d = body[plus + 1..]
                .trim()
                .parse::<u32>()
                .map_err(|e| Error::parse(at + plus + 1, format!("bad default capacity: {e}")))?;
            (&body[..plus], d)
        }
        None => (body, 1),
    };
    let walls = walls.trim_end();
    if !walls.starts_with('|') || !walls.ends_with('|') || walls.len() < 2 {
        return Err(Error::parse(
            at,
            "walled notation must start and end with `|`",
        ));
    }
    let mut capacities =
        CapacityProfile::uniform(default).map_err(|_| Error::parse(at, "default capacity is 0"))?;
    let mut boxes = Vec::new();
    let mut offset = at + 1;
    let inner = &walls[1..walls.len() - 1];
    for (label, content) in (first..).zip(inner.split('|')) {
        let symbols = tokens(content, spaced(content, colors));
        if symbols.is_empty() {
            return Err(Error::parse(offset, "box with no capacity"));
        }
        capacities.set(label, symbols.len() as u32)?;
        let mut balls = Vec::new();
        for (i, tok) in symbols {
            if let Some(c) = symbol(tok, offset + i)? {
                balls.push(c);
            }
        }
        boxes.push((label, balls));
        offset += content.len() + 1;
    }
    finish(boxes, capacities, colors, at)
}

/// Canonical text. Compact starts at label 0 (or the first ball, if that is
/// further left) and stops at the last ball. Walled covers the listed boxes
/// and every occupied box.
pub fn render_state(s: &State, notation: Notation) -> Result<String> {
    match notation {
        Notation::Compact => {
            let Some(last) = s.last_label() else {
                return Ok(String::new());
            };
            let first = s.first_label().map_or(0, |j| j.min(0));
            let body = render_range(s, notation, first, last, '_')?;
            Ok(if first == 0 {
                body
            } else {
                format!("@{first} {body}")
            })
        }
        Notation::Walled => {
            let listed = s.capacities().explicit().map(|(j, _)| j);
            let labels: Vec<Label> = listed.chain(s.boxes().map(|(j, _)| j)).collect();
            let (Some(&first), Some(&last)) = (labels.iter().min(), labels.iter().max()) else {
                return Ok(String::new());
            };
            let mut out = String::new();
            if first != 1 {
                out.push_str(&format!("@{first} "));
            }
            out.push_str(&render_range(s, notation, first, last, 'e')?);
            let d = s.capacities().default_capacity();
            if d != 1 {
                out.push_str(&format!("+{d}"));
            }
            Ok(out)
        }
    }
}

/// Boxes `from ..= to` without any prefix or suffix, using `vacancy` for
/// empty places.
pub fn render_range(
    s: &State,
    notation: Notation,
    from: Label,
    to: Label,
    vacancy: char,
) -> Result<String> {
    let wide = s.colors() > 9;
    let mut out = String::new();
    match notation {
        Notation::Compact => {
            if let Some((j, _)) = s.capacities().explicit().find(|&(_, c)| c != 1) {
                return Err(Error::NotCompact(j));
            }
            if s.capacities().default_capacity() != 1 {
                return Err(Error::NotCompact(from));
            }
            for j in from..=to {
                if wide && j > from {
                    out.push(' ');
                }
                match s.balls_at(j).first() {
                    Some(c) => out.push_str(&c.to_string()),
                    None => out.push(vacancy),
                }
            }
        }
        Notation::Walled => {
            out.push('|');
            for j in from..=to {
                let balls = s.balls_at(j);
                let empty = s.capacities().capacity(j) as usize - balls.len();
                let symbols = std::iter::repeat_n(vacancy.to_string(), empty)
                    .chain(balls.iter().map(Color::to_string));
                let sep = if wide { " " } else { "" };
                out.push_str(&symbols.collect::<Vec<_>>().join(sep));
                out.push('|');
            }
        }
    }
    Ok(out)
}
