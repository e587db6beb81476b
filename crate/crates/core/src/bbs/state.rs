use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rsk::{rsk, BiWord};
use crate::tableau::Tableau;
use crate::{Color, Label, Letter, Slot};

/// Per-box capacities: an explicit table plus a default for every other label.
///
/// The explicit table also records which boxes were listed when the profile
/// was built (walled notation renders exactly those), so it may hold entries
/// equal to the default.
///
/// Boxes are laid out on a line of slots. With `d_0 = 0` and
/// `d_j - d_{j-1} = capacity(j)`, box `j` owns slots `d_{j-1}+1 ..= d_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CapacityProfile {
    explicit: BTreeMap<Label, u32>,
    default: u32,
}

impl Default for CapacityProfile {
    fn default() -> Self {
        CapacityProfile::unit()
    }
}

impl CapacityProfile {
    /// Every box has capacity one.
    pub fn unit() -> Self {
        CapacityProfile {
            explicit: BTreeMap::new(),
            default: 1,
        }
    }

    pub fn uniform(default: u32) -> Result<Self> {
        if default == 0 {
            return Err(Error::ZeroCapacity(0));
        }
        Ok(CapacityProfile {
            explicit: BTreeMap::new(),
            default,
        })
    }

    /// Capacities for consecutive boxes starting at `first`.
    pub fn from_run(first: Label, caps: &[u32], default: u32) -> Result<Self> {
        let mut profile = CapacityProfile::uniform(default)?;
        for (j, &c) in (first..).zip(caps) {
            profile.set(j, c)?;
        }
        Ok(profile)
    }

    pub fn set(&mut self, label: Label, capacity: u32) -> Result<()> {
        if capacity == 0 {
            return Err(Error::ZeroCapacity(label));
        }
        self.explicit.insert(label, capacity);
        Ok(())
    }

    pub fn capacity(&self, label: Label) -> u32 {
        self.explicit.get(&label).copied().unwrap_or(self.default)
    }

    pub fn default_capacity(&self) -> u32 {
        self.default
    }

    /// Explicitly listed labels, ascending.
    pub fn explicit(&self) -> impl Iterator<Item = (Label, u32)> + '_ {
        self.explicit.iter().map(|(&j, &c)| (j, c))
    }

    pub fn is_unit(&self) -> bool {
        self.default == 1 && self.explicit.values().all(|&c| c == 1)
    }

    /// `d_j`, the last slot of box `j`.
    pub fn boundary(&self, label: Label) -> Slot {
        let d = self.default as i64;
        let excess = |lo: Label, hi: Label| -> i64 {
            if lo > hi {
                return 0;
            }
            self.explicit
                .range(lo..=hi)
                .map(|(_, &c)| c as i64 - d)
                .sum()
        };
        if label >= 0 {
            d * label + excess(1, label)
        } else {
            -(d * -label + excess(label + 1, 0))
        }
    }

    pub fn first_slot(&self, label: Label) -> Slot {
        self.boundary(label - 1) + 1
    }

    /// The label of the box owning `slot`.
    pub fn box_of_slot(&self, slot: Slot) -> Label {
        let (mut lo, mut hi) = if slot >= 1 { (1, slot) } else { (slot, 0) };
        while lo < hi {
            let mid = lo + (hi - lo).div_euclid(2);
            if self.boundary(mid) >= slot {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        lo
    }

    /// Reflection `j -> -j`.
    pub fn mirrored(&self) -> Self {
        CapacityProfile {
            explicit: self.explicit.iter().map(|(&j, &c)| (-j, c)).collect(),
            default: self.default,
        }
    }
}

/// A configuration of finitely many colored balls in boxes.
///
/// Each box keeps its balls sorted by color; empty boxes are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct State {
    boxes: BTreeMap<Label, Vec<Color>>,
    colors: Color,
    capacities: CapacityProfile,
}

/// One slot of the window: its box, and the ball in it if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlotCell {
    pub slot: Slot,
    pub label: Label,
    pub ball: Option<Color>,
}

impl State {
    pub fn empty(colors: Color, capacities: CapacityProfile) -> Self {
        State {
            boxes: BTreeMap::new(),
            colors,
            capacities,
        }
    }

    /// Standard and advanced states: capacity one everywhere.
    pub fn from_balls<I>(colors: Color, balls: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, Color)>,
    {
        State::from_boxes(
            colors,
            CapacityProfile::unit(),
            balls.into_iter().map(|(j, c)| (j, vec![c])),
        )
    }

    /// Balls of the same label may be spread over several items.
    pub fn from_boxes<I>(colors: Color, capacities: CapacityProfile, boxes: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, Vec<Color>)>,
    {
        let mut state = State::empty(colors, capacities);
        for (label, balls) in boxes {
            for c in balls {
                state.place(label, c)?;
            }
        }
        Ok(state)
    }

    pub(crate) fn place(&mut self, label: Label, color: Color) -> Result<()> {
        if color == 0 || color > self.colors {
            return Err(Error::ColorOutOfRange {
                color: color as i64,
                colors: self.colors,
            });
        }
        let capacity = self.capacities.capacity(label);
        let slot = self.boxes.entry(label).or_default();
        if slot.len() >= capacity as usize {
            return Err(Error::CapacityExceeded {
                label,
                count: slot.len() + 1,
                capacity,
            });
        }
        let at = slot.partition_point(|&c| c <= color);
        slot.insert(at, color);
        Ok(())
    }

    pub fn colors(&self) -> Color {
        self.colors
    }

    /// The vacancy letter `e = n + 1`, larger than every color.
    pub fn sentinel(&self) -> Letter {
        self.colors as Letter + 1
    }

    pub fn capacities(&self) -> &CapacityProfile {
        &self.capacities
    }

    /// Occupied boxes in label order, each with its colors ascending.
    pub fn boxes(&self) -> impl Iterator<Item = (Label, &[Color])> + '_ {
        self.boxes.iter().map(|(&j, b)| (j, b.as_slice()))
    }

    pub fn balls_at(&self, label: Label) -> &[Color] {
        self.boxes.get(&label).map_or(&[], Vec::as_slice)
    }

    pub fn ball_count(&self) -> usize {
        self.boxes.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn first_label(&self) -> Option<Label> {
        self.boxes.keys().next().copied()
    }

    pub fn last_label(&self) -> Option<Label> {
        self.boxes.keys().next_back().copied()
    }

    /// Every ball with its slot. Vacancies are packed to the left of each
    /// box, so a box holding `k` balls fills its last `k` slots.
    pub fn ball_slots(&self) -> Vec<(Slot, Color)> {
        let mut out = Vec::with_capacity(self.ball_count());
        for (&label, balls) in &self.boxes {
            let start = self.capacities.boundary(label) - balls.len() as Slot + 1;
            out.extend((start..).zip(balls.iter().copied()));
        }
        out
    }

    /// Slot interval `[p, q]` holding every ball now and after one step:
    /// `p` is the leftmost occupied slot, `q` the rightmost plus the number
    /// of balls. `None` for the empty state.
    pub fn window(&self) -> Option<(Slot, Slot)> {
        let (&first, balls) = self.boxes.iter().next()?;
        let last = *self.boxes.keys().next_back()?;
        let p = self.capacities.boundary(first) - balls.len() as Slot + 1;
        let q = self.capacities.boundary(last) + self.ball_count() as Slot;
        Some((p, q))
    }

    /// Slots `lo ..= hi` left to right, with their boxes and contents.
    pub fn slots(&self, lo: Slot, hi: Slot) -> Vec<SlotCell> {
        let mut out = Vec::new();
        if lo > hi {
            return out;
        }
        let mut label = self.capacities.box_of_slot(lo);
        let mut slot = self.capacities.first_slot(label);
        while slot <= hi {
            let end = self.capacities.boundary(label);
            let balls = self.balls_at(label);
            let first_ball = end - balls.len() as Slot + 1;
            for s in slot..=end {
                if s >= lo && s <= hi {
                    let ball = (s >= first_ball).then(|| balls[(s - first_ball) as usize]);
                    out.push(SlotCell {
                        slot: s,
                        label,
                        ball,
                    });
                }
            }
            slot = end + 1;
            label += 1;
        }
        out
    }

    /// The columns `(label, color)` of every ball, scanned left to right.
    pub fn to_biword(&self) -> BiWord {
        let columns = self
            .boxes
            .iter()
            .flat_map(|(&j, balls)| balls.iter().map(move |&c| (j, c as Letter)));
        BiWord::from_columns(columns)
    }

    /// Inverse of [`State::to_biword`].
    pub fn from_biword(bw: &BiWord, capacities: CapacityProfile, colors: Color) -> Result<Self> {
        let mut state = State::empty(colors, capacities);
        for (label, color) in bw.columns() {
            if color < 1 || color > colors as Letter {
                return Err(Error::ColorOutOfRange { color, colors });
            }
            state.place(label, color as Color)?;
        }
        Ok(state)
    }

    /// Box labels of the balls listed by ascending color: the bottom row of
    /// the dual bi-word.
    pub fn box_label_sequence(&self) -> Vec<Label> {
        self.to_biword().dual().bottom().to_vec()
    }

    /// `(P, Q)` of the state's bi-word.
    pub fn symbols(&self) -> (Tableau, Tableau) {
        rsk(&self.to_biword())
    }

    pub fn p_symbol(&self) -> Tableau {
        self.symbols().0
    }

    pub fn q_symbol(&self) -> Tableau {
        self.symbols().1
    }

    /// Left-right reflection with colors reversed (`c -> n + 1 - c`).
    pub fn mirrored(&self) -> State {
        let n = self.colors;
        let boxes = self
            .boxes
            .iter()
            .map(|(&j, balls)| {
                let mut b: Vec<Color> = balls.iter().map(|&c| n + 1 - c).collect();
                b.reverse();
                (-j, b)
            })
            .collect();
        State {
            boxes,
            colors: n,
            capacities: self.capacities.mirrored(),
        }
    }

    pub(crate) fn with_same_frame(&self) -> State {
        State::empty(self.colors, self.capacities.clone())
    }
}

pub fn state_to_biword(s: &State) -> BiWord {
    s.to_biword()
}

pub fn biword_to_state(bw: &BiWord, capacities: CapacityProfile, colors: Color) -> Result<State> {
    State::from_biword(bw, capacities, colors)
}

pub fn window(s: &State) -> Option<(Slot, Slot)> {
    s.window()
}
