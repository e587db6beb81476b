//! Slow reference implementations for cross-checking the fast paths.
//!
//! Nothing here calls into tableau insertion or the carrier.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::bbs::State;
use crate::knuth::elementary_moves;
use crate::{Color, Label, Letter};

pub const DEFAULT_MAX_FRONTIER: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reachability {
    Reachable,
    Unreachable,
    /// The search visited more than the allowed number of words.
    Inconclusive,
}

impl Reachability {
    pub fn is_conclusive(self) -> bool {
        self != Reachability::Inconclusive
    }
}

/// Breadth-first search for `b` from `a` through elementary Knuth moves.
pub fn bfs_knuth_equivalent(a: &[Letter], b: &[Letter], max_frontier: usize) -> Reachability {
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Reachability::Unreachable;
    }
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(a.to_vec());
    queue.push_back(a.to_vec());
    while let Some(w) = queue.pop_front() {
        if w == b {
            return Reachability::Reachable;
        }
        for next in elementary_moves(&w) {
            if seen.insert(next.clone()) {
                if seen.len() > max_frontier {
                    return Reachability::Inconclusive;
                }
                queue.push_back(next);
            }
        }
    }
    Reachability::Unreachable
}

/// The ball-moving rule followed literally, one box at a time: for each
/// color in turn, take the leftmost ball of that color that has not moved
/// yet and carry it to the nearest box on its right with room left.
pub fn naive_original_step(s: &State) -> State {
    let caps = s.capacities();
    let mut waiting: BTreeMap<Label, Vec<Color>> =
        s.boxes().map(|(j, b)| (j, b.to_vec())).collect();
    let mut arrived: BTreeMap<Label, Vec<Color>> = BTreeMap::new();

    for color in 1..=s.colors() {
        loop {
            let from = waiting
                .iter()
                .find(|(_, balls)| balls.contains(&color))
                .map(|(&j, _)| j);
            let Some(from) = from else { break };
            let balls = waiting.get_mut(&from).expect("found above");
            let at = balls.iter().position(|&c| c == color).expect("found above");
            balls.remove(at);

            let mut to = from + 1;
            loop {
                let held =
                    waiting.get(&to).map_or(0, Vec::len) + arrived.get(&to).map_or(0, Vec::len);
                if held < caps.capacity(to) as usize {
                    break;
                }
                to += 1;
            }
            arrived.entry(to).or_default().push(color);
        }
    }

    let boxes = waiting.into_iter().chain(arrived);
    State::from_boxes(s.colors(), caps.clone(), boxes).expect("every box stays within capacity")
}
