use std::fmt;

use crate::error::{Error, Result};
use crate::Letter;

/// A weakly increasing multiset swept along a word. At each letter it loads
/// the letter and unloads the smallest entry strictly larger than it, or its
/// minimum when there is none.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Carrier {
    load: Vec<Letter>,
}

impl Carrier {
    pub fn new<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut load: Vec<Letter> = letters.into_iter().collect();
        load.sort_unstable();
        Carrier { load }
    }

    /// `size` copies of `letter`.
    pub fn filled(letter: Letter, size: usize) -> Self {
        Carrier {
            load: vec![letter; size],
        }
    }

    pub fn load(&self) -> &[Letter] {
        &self.load
    }

    pub fn len(&self) -> usize {
        self.load.len()
    }

    pub fn is_empty(&self) -> bool {
        self.load.is_empty()
    }

    /// Loads `x` and returns the unloaded letter. Panics on an empty carrier.
    pub fn exchange(&mut self, x: Letter) -> Letter {
        assert!(!self.load.is_empty(), "exchange on an empty carrier");
        let above = self.load.partition_point(|&c| c <= x);
        if above < self.load.len() {
            std::mem::replace(&mut self.load[above], x)
        } else {
            // x is at least every entry: drop the minimum, append x
            let out = self.load.remove(0);
            self.load.push(x);
            out
        }
    }
}

/// One loading/unloading step of a pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PassStep {
    pub before: Carrier,
    pub loaded: Letter,
    pub unloaded: Letter,
}

/// Runs the carrier along `word`, returning the unloaded word and the final
/// carrier.
pub fn carrier_pass(carrier: &Carrier, word: &[Letter]) -> Result<(Vec<Letter>, Carrier)> {
    if carrier.is_empty() && !word.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let mut c = carrier.clone();
    let out = word.iter().map(|&x| c.exchange(x)).collect();
    Ok((out, c))
}

/// Like [`carrier_pass`], keeping every intermediate carrier.
pub fn carrier_trace(carrier: &Carrier, word: &[Letter]) -> Result<(Vec<PassStep>, Carrier)> {
    if carrier.is_empty() && !word.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let mut c = carrier.clone();
    let mut steps = Vec::with_capacity(word.len());
    for &x in word {
        let before = c.clone();
        let unloaded = c.exchange(x);
        steps.push(PassStep {
            before,
            loaded: x,
            unloaded,
        });
    }
    Ok((steps, c))
}

/// Writes the letters of a carrier as `(a,b,c)`, printing `sentinel` as `e`.
pub fn format_load(load: &[Letter], sentinel: Option<Letter>) -> String {
    let parts: Vec<String> = load.iter().map(|&x| format_letter(x, sentinel)).collect();
    format!("({})", parts.join(","))
}

pub(crate) fn format_letter(x: Letter, sentinel: Option<Letter>) -> String {
    if Some(x) == sentinel {
        "e".to_string()
    } else {
        x.to_string()
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_load(&self.load, None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::tab;

    const E: Letter = 6;

    #[test]
    fn slot_word_example() {
        let c = Carrier::filled(E, 5);
        let a = [2, 3, 4, E, 1, 5, E, E, E, E, E];
        let (a2, c2) = carrier_pass(&c, &a).unwrap();
        assert_eq!(a2, vec![E, E, E, 2, 3, E, 1, 4, 5, E, E]);
        assert_eq!(c2, c);
    }

    #[test]
    fn slot_word_intermediate_carriers() {
        let (steps, _) = carrier_trace(&Carrier::filled(E, 5), &[2, 3, 4, E, 1, 5]).unwrap();
        let loads: Vec<_> = steps.iter().map(|s| s.before.load().to_vec()).collect();
        assert_eq!(
            loads,
            vec![
                vec![E, E, E, E, E],
                vec![2, E, E, E, E],
                vec![2, 3, E, E, E],
                vec![2, 3, 4, E, E],
                vec![3, 4, E, E, E],
                vec![1, 4, E, E, E],
            ]
        );
    }

    #[test]
    fn label_example() {
        let c = Carrier::new([4, 7, 8, 9, 10, 11]);
        let (b2, c2) = carrier_pass(&c, &[5, 1, 2, 3, 6]).unwrap();
        assert_eq!(b2, vec![7, 4, 5, 8, 9]);
        assert_eq!(c2.load(), &[1, 2, 3, 6, 10, 11]);
    }

    #[test]
    fn empty_word_and_empty_carrier() {
        let c = Carrier::new([3, 1]);
        assert_eq!(carrier_pass(&c, &[]).unwrap(), (vec![], c.clone()));
        assert_eq!(
            carrier_pass(&Carrier::default(), &[1]),
            Err(Error::EmptyCarrier)
        );
        assert_eq!(
            carrier_pass(&Carrier::default(), &[]).unwrap(),
            (vec![], Carrier::default())
        );
    }

    #[test]
    fn pass_is_a_knuth_rearrangement() {
        let c = Carrier::new([4, 7, 8, 9, 10, 11]);
        let w = [5, 1, 2, 3, 6];
        let (w2, c2) = carrier_pass(&c, &w).unwrap();
        let before: Vec<_> = c.load().iter().chain(&w).copied().collect();
        let after: Vec<_> = w2.iter().chain(c2.load()).copied().collect();
        assert_eq!(tab(&before), tab(&after));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_load(&[2, 3, E], Some(E)), "(2,3,e)");
        assert_eq!(Carrier::new([2, 1]).to_string(), "(1,2)");
    }
}
