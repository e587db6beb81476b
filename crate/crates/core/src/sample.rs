//! Seeded random instances for property checks.
//!
//! Bounds: at most 6 colors, 12 balls, capacity 4 per box, and 30 boxes of
//! span. The first box of the span is drawn from `-10..=10` so negative
//! labels are exercised. A seed alone reproduces every instance.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bbs::{CapacityProfile, State};
use crate::rsk::{inverse_rsk, BiWord};
use crate::tableau::{Shape, Tableau};
use crate::{Color, Label, Letter};

pub const MAX_COLORS: Color = 6;
pub const MAX_BALLS: usize = 12;
pub const MAX_CAPACITY: u32 = 4;
pub const MAX_SPAN: i64 = 30;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// Capacity one, distinct colors.
    Standard,
    /// Capacity one, repeated colors allowed.
    Advanced,
    /// Random capacities.
    Generalized,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Standard, Flavor::Advanced, Flavor::Generalized];
}

pub fn random_state<R: Rng>(rng: &mut R, flavor: Flavor) -> State {
    let first: Label = rng.gen_range(-10..=10);
    let span = rng.gen_range(1..=MAX_SPAN);
    let labels: Vec<Label> = (first..first + span).collect();

    let capacities = match flavor {
        Flavor::Standard | Flavor::Advanced => CapacityProfile::unit(),
        Flavor::Generalized => {
            let caps: Vec<u32> = labels
                .iter()
                .map(|_| rng.gen_range(1..=MAX_CAPACITY))
                .collect();
            let default = rng.gen_range(1..=MAX_CAPACITY);
            CapacityProfile::from_run(first, &caps, default).expect("capacities are positive")
        }
    };
    // one slot entry per unit of capacity, so a sample never overfills a box
    let mut room: Vec<Label> = labels
        .iter()
        .flat_map(|&j| std::iter::repeat_n(j, capacities.capacity(j) as usize))
        .collect();
    room.shuffle(rng);

    let most = MAX_BALLS.min(room.len());
    let colors: Color = match flavor {
        Flavor::Standard => rng.gen_range(1..=MAX_COLORS.min(most as Color)),
        _ => rng.gen_range(1..=MAX_COLORS),
    };
    let balls: Vec<Color> = match flavor {
        Flavor::Standard => {
            let mut c: Vec<Color> = (1..=colors).collect();
            c.shuffle(rng);
            c
        }
        _ => {
            let count = if rng.gen_bool(0.02) {
                0
            } else {
                rng.gen_range(1..=most)
            };
            (0..count).map(|_| rng.gen_range(1..=colors)).collect()
        }
    };
    let boxes = room.into_iter().zip(balls).map(|(j, c)| (j, vec![c]));
    State::from_boxes(colors, capacities, boxes).expect("sampled within capacity")
}

/// `count` states cycling through the three flavors.
pub fn random_corpus(seed: u64, count: usize) -> Vec<State> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| random_state(&mut rng, Flavor::ALL[i % 3]))
        .collect()
}

/// Columns over `1..=alphabet` on both rows.
pub fn random_biword<R: Rng>(rng: &mut R, max_len: usize, alphabet: Letter) -> BiWord {
    let len = rng.gen_range(0..=max_len);
    BiWord::from_columns(
        (0..len).map(|_| (rng.gen_range(1..=alphabet), rng.gen_range(1..=alphabet))),
    )
}

/// A partition of `size`, by sorting a random composition.
pub fn random_shape<R: Rng>(rng: &mut R, size: usize) -> Shape {
    let mut parts = Vec::new();
    let mut left = size;
    while left > 0 {
        let p = rng.gen_range(1..=left);
        parts.push(p);
        left -= p;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Shape::new(parts).expect("sorted positive parts")
}

/// A standard tableau of the given shape, grown one outer corner at a time.
pub fn random_standard_tableau<R: Rng>(rng: &mut R, shape: &Shape) -> Tableau {
    let target = shape.parts();
    let mut rows: Vec<Vec<Letter>> = vec![Vec::new(); target.len()];
    for k in 1..=shape.size() as Letter {
        let addable: Vec<usize> = (0..target.len())
            .filter(|&r| rows[r].len() < target[r] && (r == 0 || rows[r - 1].len() > rows[r].len()))
            .collect();
        let r = *addable
            .choose(rng)
            .expect("an unfinished shape has an outer corner");
        rows[r].push(k);
    }
    Tableau::from_rows(rows).expect("corner growth gives a standard tableau")
}

/// A shape with at least two standard tableaux, a recording tableau `Q` on
/// distinct labels, and two different standard P-symbols, as states.
#[derive(Debug, Clone)]
pub struct TwinStates {
    pub q: Tableau,
    pub first: State,
    pub second: State,
}

pub fn random_twin_states<R: Rng>(rng: &mut R) -> TwinStates {
    let shape = loop {
        let size = rng.gen_range(3..=MAX_BALLS.min(10));
        let shape = random_shape(rng, size);
        if shape.parts().len() > 1 && shape.parts()[0] > 1 {
            break shape;
        }
    };
    let n = shape.size();
    let first_label: Label = rng.gen_range(-10..=10);
    let mut pool: Vec<Label> = (first_label..first_label + MAX_SPAN).collect();
    pool.shuffle(rng);
    let mut labels = pool[..n].to_vec();
    labels.sort_unstable();

    let skeleton = random_standard_tableau(rng, &shape);
    let q_rows = skeleton
        .rows()
        .iter()
        .map(|row| row.iter().map(|&k| labels[k as usize - 1]).collect())
        .collect();
    let q = Tableau::from_rows(q_rows).expect("relabelling keeps order");

    let p1 = random_standard_tableau(rng, &shape);
    let p2 = loop {
        let p = random_standard_tableau(rng, &shape);
        if p != p1 {
            break p;
        }
    };
    let build = |p: &Tableau| {
        let bw = inverse_rsk(p, &q).expect("same shape");
        State::from_biword(&bw, CapacityProfile::unit(), n as Color).expect("distinct labels")
    };
    TwinStates {
        first: build(&p1),
        second: build(&p2),
        q,
    }
}
