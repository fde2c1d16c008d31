//! Deciding whether a sequence is the path-length sequence of a binary tree.

use std::fmt;

use crate::dyadic::Dyadic;
use crate::islands::{annotate_islands, find_islands_fast, IslandNode};
use crate::sequence::{kraft_sum, LengthSeq, Segment};

/// Why a sequence is rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    KraftSumNotOne {
        actual: Dyadic,
    },
    /// `2^m * K` is not an integer for this island.
    NonIntegerScaledKraft {
        seg: Segment,
        m: u32,
        kraft: Dyadic,
    },
}

impl Witness {
    pub fn scaled_kraft(&self) -> Option<Dyadic> {
        match self {
            Witness::KraftSumNotOne { .. } => None,
            Witness::NonIntegerScaledKraft { m, kraft, .. } => Some(kraft.mul_pow2(*m as u64)),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::KraftSumNotOne { actual } => write!(f, "kraft sum = {actual} ≠ 1"),
            Witness::NonIntegerScaledKraft { seg, m, kraft } => write!(
                f,
                "island {seg}: 2^m·K = {} not an integer",
                kraft.mul_pow2(*m as u64)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Witness),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Valid => None,
            Verdict::Invalid(w) => Some(w),
        }
    }
}

/// Valid iff the Kraft sum is 1 and `2^m(S) K(S)` is an integer for every
/// island `S`. The witness is the Kraft sum, checked first, or else the
/// first failing island in preorder.
pub fn validate(seq: &LengthSeq) -> Verdict {
    validate_with(seq, find_islands_fast)
}

/// [`validate`] with a caller-chosen island detector.
pub fn validate_with(seq: &LengthSeq, detect: impl Fn(&LengthSeq) -> Vec<Segment>) -> Verdict {
    let total = kraft_sum(seq);
    if !total.is_one() {
        return Verdict::Invalid(Witness::KraftSumNotOne { actual: total });
    }
    let islands = annotate_islands(seq, &detect(seq));
    first_failure(&islands).map_or(Verdict::Valid, Verdict::Invalid)
}

pub(crate) fn first_failure(islands: &[IslandNode]) -> Option<Witness> {
    islands
        .iter()
        .find(|node| !node.scaled_kraft().is_integer())
        .map(|node| Witness::NonIntegerScaledKraft {
            seg: node.seg,
            m: node.m,
            kraft: node.kraft.clone(),
        })
}

/// Independent check that never looks at islands: the Kraft sum is 1 and
/// each prefix sum `a_k = sum_{t<k} 2^-l_t` is a multiple of `2^-l_k`, i.e.
/// every codeword interval starts on its own dyadic grid.
pub fn validate_prefix_alignment(seq: &LengthSeq) -> bool {
    let mut prefix = Dyadic::zero();
    for &l in seq.iter() {
        if !prefix.mul_pow2(l as u64).is_integer() {
            return false;
        }
        prefix += Dyadic::pow2_neg(l as u64);
    }
    prefix.is_one()
}
