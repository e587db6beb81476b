//! Reductions generalized -> advanced -> standard on bi-words.
//!
//! A generalized state becomes an advanced one by replacing each box label by
//! the slot its ball occupies. An advanced state becomes a standard one by
//! renaming the balls `1..=N` in order of (color, slot).

use super::state::CapacityProfile;
use crate::error::{Error, Result};
use crate::rsk::BiWord;
use crate::{Label, Letter, Slot};

/// The slot -> box-label function of a capacity profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotLabels {
    capacities: CapacityProfile,
}

impl SlotLabels {
    pub fn label_of(&self, slot: Slot) -> Label {
        self.capacities.box_of_slot(slot)
    }

    /// Replaces slot indices on the top row by box labels.
    pub fn restore(&self, advanced: &BiWord) -> BiWord {
        BiWord::from_columns(advanced.columns().map(|(i, c)| (self.label_of(i), c)))
    }
}

/// The rank -> color function; entry `k - 1` is the color of ball `k`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColorMap {
    colors: Vec<Letter>,
}

impl ColorMap {
    pub fn colors(&self) -> &[Letter] {
        &self.colors
    }

    pub fn color_of(&self, rank: Letter) -> Option<Letter> {
        usize::try_from(rank - 1)
            .ok()
            .and_then(|k| self.colors.get(k))
            .copied()
    }

    /// Replaces ranks on the bottom row by colors.
    pub fn restore(&self, standard: &BiWord) -> BiWord {
        BiWord::from_columns(
            standard
                .columns()
                .map(|(i, k)| (i, self.color_of(k).expect("rank within 1..=N"))),
        )
    }
}

/// Balls in box `j` occupy its last slots, colors ascending.
pub fn reduce_generalized_to_advanced(
    generalized: &BiWord,
    capacities: &CapacityProfile,
) -> Result<(BiWord, SlotLabels)> {
    let columns: Vec<(Label, Letter)> = generalized.columns().collect();
    let mut out = Vec::with_capacity(columns.len());
    for group in columns.chunk_by(|a, b| a.0 == b.0) {
        let label = group[0].0;
        let capacity = capacities.capacity(label);
        if group.len() > capacity as usize {
            return Err(Error::CapacityExceeded {
                label,
                count: group.len(),
                capacity,
            });
        }
        let start = capacities.boundary(label) - group.len() as Slot + 1;
        out.extend((start..).zip(group.iter().map(|&(_, c)| c)));
    }
    Ok((
        BiWord::from_columns(out),
        SlotLabels {
            capacities: capacities.clone(),
        },
    ))
}

pub fn reduce_advanced_to_standard(advanced: &BiWord) -> (BiWord, ColorMap) {
    let dual = advanced.dual();
    let colors = dual.top().to_vec();
    let standard = BiWord::from_columns(
        dual.bottom()
            .iter()
            .zip(1..)
            .map(|(&slot, rank)| (slot, rank)),
    );
    (standard, ColorMap { colors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig6() -> BiWord {
        BiWord::new(
            vec![1, 2, 2, 2, 3, 4, 5, 5, 6, 6],
            vec![5, 1, 2, 5, 4, 3, 1, 2, 4, 5],
        )
        .unwrap()
    }

    fn caps() -> CapacityProfile {
        CapacityProfile::from_run(1, &[3, 4, 1, 3, 2, 3, 2, 1, 5, 2], 1).unwrap()
    }

    #[test]
    fn generalized_to_slots() {
        let (ad, l) = reduce_generalized_to_advanced(&fig6(), &caps()).unwrap();
        assert_eq!(ad.top(), &[3, 5, 6, 7, 8, 11, 12, 13, 15, 16]);
        assert_eq!(ad.bottom(), fig6().bottom());
        assert_eq!(l.restore(&ad), fig6());
    }

    #[test]
    fn unit_capacities_keep_labels() {
        let bw = BiWord::new(vec![-3, 0, 4], vec![2, 2, 1]).unwrap();
        let (ad, l) = reduce_generalized_to_advanced(&bw, &CapacityProfile::unit()).unwrap();
        assert_eq!(ad, bw);
        assert_eq!(l.restore(&ad), bw);
    }

    #[test]
    fn overfull_box() {
        let bw = BiWord::new(vec![3, 3], vec![1, 2]).unwrap();
        assert!(reduce_generalized_to_advanced(&bw, &caps()).is_err());
    }

    #[test]
    fn advanced_to_standard() {
        let bw = BiWord::new(vec![1, 2, 3, 5], vec![2, 1, 2, 1]).unwrap();
        let (st, c) = reduce_advanced_to_standard(&bw);
        // dual columns: (1,2) (1,5) (2,1) (2,3)
        assert_eq!(st.top(), &[1, 2, 3, 5]);
        assert_eq!(st.bottom(), &[3, 1, 4, 2]);
        assert_eq!(c.colors(), &[1, 1, 2, 2]);
        assert_eq!(c.restore(&st), bw);
    }

    #[test]
    fn standard_input_ranks_sorted_colors() {
        let bw = BiWord::new(vec![1, 2, 3, 5, 6], vec![2, 3, 4, 1, 5]).unwrap();
        let (st, c) = reduce_advanced_to_standard(&bw);
        assert_eq!(st, bw);
        assert_eq!(c.colors(), &[1, 2, 3, 4, 5]);
    }

    #[test]
    fn empty() {
        let (ad, _) = reduce_generalized_to_advanced(&BiWord::empty(), &caps()).unwrap();
        assert!(ad.is_empty());
        let (st, c) = reduce_advanced_to_standard(&BiWord::empty());
        assert!(st.is_empty());
        assert!(c.colors().is_empty());
    }
}
