use proptest::prelude::*;

use boxball::bbs::{
    box_label_step, carrier_pass, carrier_step, original_step, q_evolve, reverse_step, Carrier,
    State,
};
use boxball::knuth::{elementary_moves, knuth_equivalent, strip_largest};
use boxball::notation::{parse_state, render_state, Notation};
use boxball::oracle::naive_original_step;
use boxball::rsk::{inverse_rsk, matrix_of, rsk, BiWord};
use boxball::sample::{random_state, rng, Flavor};
use boxball::tableau::{is_tableau_word, tab, Tableau};
use boxball::Letter;

fn word(max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(-3i64..=6, 0..=max_len)
}

fn biword() -> impl Strategy<Value = BiWord> {
    prop::collection::vec((-4i64..=6, 1i64..=6), 0..=12).prop_map(BiWord::from_columns)
}

fn state() -> impl Strategy<Value = State> {
    (any::<u64>(), 0usize..3).prop_map(|(seed, f)| random_state(&mut rng(seed), Flavor::ALL[f]))
}

proptest! {
    #[test]
    fn tab_is_a_tableau_of_the_same_content(w in word(14)) {
        let t = tab(&w);
        prop_assert!(Tableau::from_rows(t.rows().to_vec()).is_ok());
        let mut a = t.word();
        let mut b = w.clone();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        prop_assert!(is_tableau_word(&t.word()));
        prop_assert_eq!(tab(&t.word()), t);
    }

    #[test]
    fn knuth_moves_keep_the_tableau(w in word(10)) {
        for v in elementary_moves(&w) {
            prop_assert_eq!(tab(&v), tab(&w));
            prop_assert!(elementary_moves(&v).contains(&w));
        }
    }

    #[test]
    fn stripping_keeps_equivalence(w in word(10), p in 0usize..4) {
        let v = elementary_moves(&w).into_iter().next().unwrap_or_else(|| w.clone());
        prop_assert!(knuth_equivalent(&w, &v));
        if p <= w.len() {
            let a = strip_largest(&w, p).unwrap();
            let b = strip_largest(&v, p).unwrap();
            prop_assert!(knuth_equivalent(&a, &b));
        } else {
            prop_assert!(strip_largest(&w, p).is_err());
        }
    }

    #[test]
    fn rsk_round_trip(bw in biword()) {
        let (p, q) = rsk(&bw);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert_eq!(inverse_rsk(&p, &q).unwrap(), bw.clone());
        prop_assert_eq!(rsk(&bw.dual()), (q, p));
        prop_assert_eq!(bw.dual().dual(), bw.clone());
        prop_assert_eq!(matrix_of(&bw.dual()), matrix_of(&bw).transpose());
    }

    #[test]
    fn biword_text_round_trip(bw in biword()) {
        prop_assert_eq!(bw.to_string().parse::<BiWord>().unwrap(), bw);
    }

    #[test]
    fn tableau_text_round_trip(w in word(12)) {
        let t = tab(&w);
        prop_assert_eq!(t.to_string().parse::<Tableau>().unwrap(), t);
    }

    #[test]
    fn carrier_pass_is_knuth_consistent(c in word(6), w in word(10)) {
        prop_assume!(!c.is_empty());
        let carrier = Carrier::new(c.iter().copied());
        let (w2, c2) = carrier_pass(&carrier, &w).unwrap();
        prop_assert_eq!(c2.len(), carrier.len());
        let before: Vec<Letter> = carrier.load().iter().chain(&w).copied().collect();
        let after: Vec<Letter> = w2.iter().chain(c2.load()).copied().collect();
        prop_assert_eq!(tab(&before), tab(&after));
    }

    #[test]
    fn steps_agree_and_reverse(s in state()) {
        let next = original_step(&s);
        prop_assert_eq!(&carrier_step(&s), &next);
        prop_assert_eq!(&naive_original_step(&s), &next);
        prop_assert_eq!(&reverse_step(&next), &s);
        prop_assert_eq!(next.p_symbol(), s.p_symbol());
        prop_assert_eq!(next.ball_count(), s.ball_count());
    }

    #[test]
    fn labels_and_q_evolve(s in state()) {
        prop_assume!(!s.is_empty());
        let next = original_step(&s);
        let (b2, _) = box_label_step(&s).unwrap();
        prop_assert_eq!(b2, next.box_label_sequence());
        let q = q_evolve(&s.q_symbol(), &s).unwrap();
        prop_assert_eq!(q.shape(), s.q_symbol().shape());
        prop_assert_eq!(q, next.q_symbol());
    }

    #[test]
    fn state_biword_round_trip(s in state()) {
        let back = State::from_biword(&s.to_biword(), s.capacities().clone(), s.colors()).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn notation_round_trip(s in state()) {
        let walled = render_state(&s, Notation::Walled).unwrap();
        let back = parse_state(&walled, Some(s.colors())).unwrap();
        prop_assert_eq!(render_state(&back, Notation::Walled).unwrap(), walled);
        if s.capacities().is_unit() {
            let compact = render_state(&s, Notation::Compact).unwrap();
            let back = parse_state(&compact, Some(s.colors())).unwrap();
            // compact text does not record which boxes were listed
            prop_assert_eq!(back.to_biword(), s.to_biword());
            prop_assert!(back.capacities().is_unit());
            prop_assert_eq!(render_state(&back, Notation::Compact).unwrap(), compact);
        }
    }
}
