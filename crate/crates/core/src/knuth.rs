//! Elementary Knuth transformations and Knuth equivalence of words.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::tableau::tab;
use crate::Letter;

/// The four ways a three-letter window can be rewritten: each elementary
/// transformation and its inverse, `None` where the inequalities fail.
fn rewrites(a: Letter, b: Letter, c: Letter) -> [Option<[Letter; 3]>; 4] {
    [
        // yzx -> yxz  (x < y <= z)
        (c < a && a <= b).then_some([a, c, b]),
        // yxz -> yzx  (x < y <= z)
        (b < a && a <= c).then_some([a, c, b]),
        // xzy -> zxy  (x <= y < z)
        (a <= c && c < b).then_some([b, a, c]),
        // zxy -> xzy  (x <= y < z)
        (b <= c && c < a).then_some([b, a, c]),
    ]
}

/// Every word reachable from `word` by exactly one elementary Knuth
/// transformation or its inverse, at any position.
pub fn elementary_moves(word: &[Letter]) -> BTreeSet<Vec<Letter>> {
    let mut out = BTreeSet::new();
    for i in 0..word.len().saturating_sub(2) {
        for replacement in rewrites(word[i], word[i + 1], word[i + 2])
            .into_iter()
            .flatten()
        {
            let mut next = word.to_vec();
            next[i..i + 3].copy_from_slice(&replacement);
            out.insert(next);
        }
    }
    out
}

/// Knuth equivalence, decided by comparing insertion tableaux.
pub fn knuth_equivalent(a: &[Letter], b: &[Letter]) -> bool {
    a.len() == b.len() && tab(a) == tab(b)
}

/// Deletes the `p` largest letters of `word`, keeping the survivors in order.
/// Among equal letters the rightmost occurrences go first.
pub fn strip_largest(word: &[Letter], p: usize) -> Result<Vec<Letter>> {
    if p > word.len() {
        return Err(Error::StripTooMany {
            requested: p,
            len: word.len(),
        });
    }
    let mut order: Vec<usize> = (0..word.len()).collect();
    order.sort_by(|&i, &j| word[j].cmp(&word[i]).then(j.cmp(&i)));
    let mut doomed = vec![false; word.len()];
    for &i in &order[..p] {
        doomed[i] = true;
    }
    Ok(word
        .iter()
        .zip(doomed)
        .filter_map(|(&x, gone)| (!gone).then_some(x))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    const LEFT: [Letter; 10] = [5, 1, 5, 2, 4, 3, 1, 2, 4, 5];
    const RIGHT: [Letter; 10] = [5, 4, 1, 5, 2, 1, 3, 2, 4, 5];

    #[test]
    fn first_link_of_example_chain() {
        let moves = elementary_moves(&LEFT);
        assert!(moves.contains(&vec![5, 5, 1, 2, 4, 3, 1, 2, 4, 5]));
    }

    #[test]
    fn whole_example_chain_is_made_of_moves() {
        let chain: [&[Letter]; 7] = [
            &[5, 1, 5, 2, 4, 3, 1, 2, 4, 5],
            &[5, 5, 1, 2, 4, 3, 1, 2, 4, 5],
            &[5, 5, 1, 4, 2, 3, 1, 2, 4, 5],
            &[5, 5, 4, 1, 2, 3, 1, 2, 4, 5],
            &[5, 4, 5, 1, 2, 3, 1, 2, 4, 5],
            &[5, 4, 5, 1, 2, 1, 3, 2, 4, 5],
            &[5, 4, 1, 5, 2, 1, 3, 2, 4, 5],
        ];
        for pair in chain.windows(2) {
            assert!(elementary_moves(pair[0]).contains(pair[1]), "{pair:?}");
            assert!(elementary_moves(pair[1]).contains(pair[0]), "{pair:?}");
        }
    }

    #[test]
    fn no_moves() {
        assert!(elementary_moves(&[7]).is_empty());
        assert!(elementary_moves(&[]).is_empty());
        assert!(elementary_moves(&[1, 2, 3]).is_empty());
    }

    #[test]
    fn equivalence() {
        assert!(knuth_equivalent(&LEFT, &RIGHT));
        assert!(knuth_equivalent(&LEFT, &LEFT));
        assert!(!knuth_equivalent(&[1, 2], &[2, 1]));
    }

    #[test]
    fn stripping() {
        assert_eq!(strip_largest(&LEFT, 3).unwrap(), vec![1, 2, 4, 3, 1, 2, 4]);
        assert_eq!(strip_largest(&RIGHT, 3).unwrap(), vec![4, 1, 2, 1, 3, 2, 4]);
        assert_eq!(strip_largest(&LEFT, 0).unwrap(), LEFT.to_vec());
        assert!(strip_largest(&LEFT, 11).is_err());
        assert_eq!(strip_largest(&[3, 1, 3, 2], 1).unwrap(), vec![3, 1, 2]);
        assert!(knuth_equivalent(
            &strip_largest(&LEFT, 3).unwrap(),
            &strip_largest(&RIGHT, 3).unwrap()
        ));
    }
}
