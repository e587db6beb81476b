//! One time step of the box-ball system, computed several ways.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::carrier::{carrier_pass, Carrier};
use super::state::State;
use crate::error::{Error, Result};
use crate::tableau::{tab, Tableau};
use crate::{Label, Letter, Slot};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Move balls color by color, leftmost first.
    #[default]
    Original,
    /// Sweep a carrier of vacancies along the slot word.
    Carrier,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Original => "original",
            Algorithm::Carrier => "carrier",
        })
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "original" => Ok(Algorithm::Original),
            "carrier" => Ok(Algorithm::Carrier),
            _ => Err(Error::parse(0, format!("unknown algorithm {s:?}"))),
        }
    }
}

/// Moves every ball once: colors in increasing order, leftmost ball first
/// within a color, each to the nearest free slot on its right.
///
/// A slot is free if it was vacant or held a ball of a smaller color, and
/// no ball has been moved into it yet.
pub fn original_step(s: &State) -> State {
    let Some((p, q)) = s.window() else {
        return s.clone();
    };
    let mut balls = s.ball_slots();
    let occupied: BTreeSet<Slot> = balls.iter().map(|&(slot, _)| slot).collect();
    let mut free: BTreeSet<Slot> = (p..=q).filter(|i| !occupied.contains(i)).collect();
    balls.sort_unstable_by_key(|&(slot, c)| (c, slot));

    let caps = s.capacities();
    let mut next = s.with_same_frame();
    for group in balls.chunk_by(|a, b| a.1 == b.1) {
        for &(slot, color) in group {
            let target = *free
                .range(slot + 1..)
                .next()
                .expect("the window holds every target");
            free.remove(&target);
            next.place(caps.box_of_slot(target), color)
                .expect("a free slot has room");
        }
        free.extend(group.iter().map(|&(slot, _)| slot));
    }
    next
}

/// The slot word over the window, with vacancies as the sentinel, passed
/// through a carrier holding one sentinel per ball.
pub fn carrier_step(s: &State) -> State {
    let Some((p, q)) = s.window() else {
        return s.clone();
    };
    let e = s.sentinel();
    let cells = s.slots(p, q);
    let word: Vec<Letter> = cells
        .iter()
        .map(|c| c.ball.map_or(e, Letter::from))
        .collect();
    let carrier = Carrier::filled(e, s.ball_count());
    let (out, last) = carrier_pass(&carrier, &word).expect("carrier is nonempty");
    debug_assert_eq!(last, carrier);

    let mut next = s.with_same_frame();
    for (cell, x) in cells.iter().zip(out) {
        if x != e {
            next.place(cell.label, x as u32)
                .expect("carrier output respects capacities");
        }
    }
    next
}

/// One step backwards in time: the forward rule seen in a mirror, with the
/// color order reversed.
pub fn reverse_step(s: &State) -> State {
    original_step(&s.mirrored()).mirrored()
}

pub fn step(s: &State, algorithm: Algorithm) -> State {
    match algorithm {
        Algorithm::Original => original_step(s),
        Algorithm::Carrier => carrier_step(s),
    }
}

/// `[s, step(s), ...]` with `steps + 1` entries.
pub fn evolve(s: &State, steps: usize, algorithm: Algorithm) -> Vec<State> {
    let mut out = Vec::with_capacity(steps + 1);
    out.push(s.clone());
    for _ in 0..steps {
        let next = step(out.last().expect("nonempty"), algorithm);
        out.push(next);
    }
    out
}

/// Labels of the vacant slots of the window, one per slot.
pub fn box_label_carrier(s: &State) -> Result<Carrier> {
    let (p, q) = s.window().ok_or(Error::EmptyState)?;
    Ok(Carrier::new(
        s.slots(p, q)
            .into_iter()
            .filter(|c| c.ball.is_none())
            .map(|c| c.label),
    ))
}

/// Next box-label sequence, computed from the current one by the carrier of
/// vacant labels. Also returns the final carrier.
pub fn box_label_step(s: &State) -> Result<(Vec<Label>, Carrier)> {
    let carrier = box_label_carrier(s)?;
    carrier_pass(&carrier, &s.box_label_sequence())
}

/// The Q-symbol one step later, from the reading word of `q` and the
/// vacant-label carrier of `context`.
pub fn q_evolve(q: &Tableau, context: &State) -> Result<Tableau> {
    if q.is_empty() {
        return Ok(Tableau::empty());
    }
    let carrier = box_label_carrier(context)?;
    let (word, _) = carrier_pass(&carrier, &q.word())?;
    Ok(tab(&word))
}
