//! Seeded generators shared by the integration tests.

use pathlen::LengthSeq;
use rand::seq::SliceRandom;
use rand::Rng;

/// Path lengths of a tree grown by splitting a uniformly chosen leaf until
/// it has `leaves` leaves. Splitting leaf `k` replaces `l_k` by
/// `l_k + 1, l_k + 1` in place, which keeps the left-to-right order.
pub fn grown_sequence(rng: &mut impl Rng, leaves: usize) -> LengthSeq {
    let mut lengths = vec![0u32];
    while lengths.len() < leaves {
        let k = rng.gen_range(0..lengths.len());
        let d = lengths[k] + 1;
        lengths[k] = d;
        lengths.insert(k + 1, d);
    }
    LengthSeq::new(lengths).unwrap()
}

/// A mix of valid sequences, rearranged valid sequences (Kraft sum 1 but
/// usually invalid) and unconstrained ones, with `n <= max_len`.
pub fn mixed_sequence(rng: &mut impl Rng, max_len: usize) -> LengthSeq {
    let n = rng.gen_range(1..=max_len);
    match rng.gen_range(0..4) {
        0 | 1 => grown_sequence(rng, n),
        2 => {
            let mut v = grown_sequence(rng, n).into_values();
            v.shuffle(rng);
            LengthSeq::new(v).unwrap()
        }
        _ => LengthSeq::new((0..n).map(|_| rng.gen_range(0..=8)).collect()).unwrap(),
    }
}

/// Every sequence with `1 <= n <= max_len` and values in `0..=max_value`.
pub fn all_sequences(max_len: usize, max_value: u32) -> Vec<LengthSeq> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * (max_value as usize + 1));
        for prefix in &frontier {
            for v in 0..=max_value {
                let mut p = prefix.clone();
                p.push(v);
                out.push(LengthSeq::new(p.clone()).unwrap());
                next.push(p);
            }
        }
        frontier = next;
    }
    out
}
