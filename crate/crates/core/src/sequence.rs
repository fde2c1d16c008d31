//! Length sequences, segments, Kraft sums and the neighborhood maximin.
//!
//! All positions are 1-based: a sequence of `n` values is indexed `1..=n`
//! and a [`Segment`] `[lo,hi]` names the closed range of positions.

use std::fmt;
use std::ops::Deref;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

/// A non-empty sequence of non-negative path lengths `l_1, ..., l_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LengthSeq(Vec<u32>);

impl LengthSeq {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(LengthSeq(values))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    /// The whole range `[1,n]`.
    pub fn full(&self) -> Segment {
        Segment {
            lo: 1,
            hi: self.0.len(),
        }
    }

    /// Values covered by `seg`.
    pub fn slice(&self, seg: Segment) -> Result<&[u32]> {
        seg.check_within(self.len())?;
        Ok(&self.0[seg.lo - 1..seg.hi])
    }

    pub fn max_value(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl Deref for LengthSeq {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl TryFrom<Vec<u32>> for LengthSeq {
    type Error = Error;

    fn try_from(values: Vec<u32>) -> Result<Self> {
        LengthSeq::new(values)
    }
}

impl fmt::Display for LengthSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// A closed 1-based index interval `[lo,hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Segment {
    pub lo: usize,
    pub hi: usize,
}

impl Segment {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 || lo > hi {
            return Err(Error::MalformedSegment { lo, hi });
        }
        Ok(Segment { lo, hi })
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, other: &Segment) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn properly_contains(&self, other: &Segment) -> bool {
        self.contains(other) && self != other
    }

    pub fn is_disjoint(&self, other: &Segment) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    pub fn check_within(&self, n: usize) -> Result<()> {
        if self.lo == 0 || self.lo > self.hi || self.hi > n {
            return Err(Error::SegmentOutOfRange { seg: *self, n });
        }
        Ok(())
    }

    /// Preorder of the containment forest: by `lo` ascending, then wider first.
    pub fn preorder_key(&self) -> (usize, std::cmp::Reverse<usize>) {
        (self.lo, std::cmp::Reverse(self.hi))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// `sum 2^-l_k` over the whole sequence.
pub fn kraft_sum(seq: &LengthSeq) -> Dyadic {
    Dyadic::kraft_sum_of(seq.iter().copied())
}

/// `K[i,j] = 2^-l_i + ... + 2^-l_j`.
pub fn partial_kraft(seq: &LengthSeq, seg: Segment) -> Result<Dyadic> {
    Ok(Dyadic::kraft_sum_of(seq.slice(seg)?.iter().copied()))
}

/// Neighborhood maximin `m[i,j]`: the largest minimum over segments that
/// properly contain `seg`, and 0 for `seg = [1,n]`.
///
/// Every proper superinterval includes `l_{i-1}` or `l_{j+1}`, and growing
/// an interval can only lower its minimum, so the best one extends `seg` by
/// a single neighbor. That gives `min(min(seg), max(neighbors))`.
pub fn maximin(seq: &LengthSeq, seg: Segment) -> Result<u32> {
    let values = seq.slice(seg)?;
    let seg_min = values.iter().copied().min().unwrap_or(0);
    Ok(maximin_with_min(seq, seg, seg_min))
}

/// [`maximin`] for a segment already known to be in range, with its minimum.
pub(crate) fn maximin_with_min(seq: &LengthSeq, seg: Segment, seg_min: u32) -> u32 {
    let left = (seg.lo > 1).then(|| seq.at(seg.lo - 1));
    let right = (seg.hi < seq.len()).then(|| seq.at(seg.hi + 1));
    match left.max(right) {
        None => 0,
        Some(neighbor) => neighbor.min(seg_min),
    }
}
