//! Exhaustive ground truth for small sizes: every topological binary tree
//! with a given number of leaves, every sequence with Kraft sum exactly 1,
//! and the set comparison between the two.

use std::collections::BTreeSet;
use std::thread;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::sequence::LengthSeq;
use crate::tree::BinTree;
use crate::treebuild::path_lengths;
use crate::validator::validate;

/// `Catalan(k)` by the convolution recurrence, saturating at `u128::MAX`.
pub fn catalan(k: usize) -> u128 {
    let mut table = vec![1u128];
    for m in 1..=k {
        let next = (0..m).fold(0u128, |acc, i| {
            acc.saturating_add(table[i].saturating_mul(table[m - 1 - i]))
        });
        table.push(next);
    }
    table[k]
}

/// Shape of a tree as the enumeration sees it: a split remembers how many
/// leaves went left.
#[derive(Clone, Debug)]
enum Shape {
    Leaf,
    Split {
        left_leaves: usize,
        left: Box<Shape>,
        right: Box<Shape>,
    },
}

impl Shape {
    fn first(leaves: usize) -> Shape {
        if leaves == 1 {
            Shape::Leaf
        } else {
            Shape::Split {
                left_leaves: 1,
                left: Box::new(Shape::Leaf),
                right: Box::new(Shape::first(leaves - 1)),
            }
        }
    }

    /// Step to the next shape with the same number of leaves.
    fn advance(&mut self, leaves: usize) -> bool {
        let Shape::Split {
            left_leaves,
            left,
            right,
        } = self
        else {
            return false;
        };
        if right.advance(leaves - *left_leaves) {
            return true;
        }
        if left.advance(*left_leaves) {
            **right = Shape::first(leaves - *left_leaves);
            return true;
        }
        if *left_leaves + 1 < leaves {
            *left_leaves += 1;
            **left = Shape::first(*left_leaves);
            **right = Shape::first(leaves - *left_leaves);
            return true;
        }
        false
    }

    fn to_tree(&self) -> BinTree {
        match self {
            Shape::Leaf => BinTree::leaf(),
            Shape::Split { left, right, .. } => BinTree::join(left.to_tree(), right.to_tree()),
        }
    }
}

/// Lazy stream of all trees with `n_leaves` leaves, ordered by the size of
/// the left subtree, then recursively by left subtree, then right subtree.
#[derive(Clone, Debug)]
pub struct TreeFamily {
    n_leaves: usize,
    state: Option<Shape>,
    started: bool,
}

impl TreeFamily {
    pub fn n_leaves(&self) -> usize {
        self.n_leaves
    }
}

impl Iterator for TreeFamily {
    type Item = BinTree;

    fn next(&mut self) -> Option<BinTree> {
        let shape = self.state.as_mut()?;
        if self.started && !shape.advance(self.n_leaves) {
            self.state = None;
            return None;
        }
        self.started = true;
        Some(shape.to_tree())
    }
}

pub fn enumerate_trees(n_leaves: usize) -> Result<TreeFamily> {
    if n_leaves < 1 {
        return Err(Error::NoLeaves);
    }
    Ok(TreeFamily {
        n_leaves,
        state: Some(Shape::first(n_leaves)),
        started: false,
    })
}

struct Frame {
    remaining: Dyadic,
    next_value: u32,
}

/// Lazy lexicographic stream of sequences with Kraft sum exactly 1.
///
/// Depth-first over the Kraft mass still to be placed. A branch is cut as
/// soon as the remainder, measured in units of `2^-max_value`, cannot be
/// written as a sum of a feasible number of powers of two: it needs at
/// least its popcount and at most its own value in terms.
pub struct KraftOneSequences {
    min_len: usize,
    max_len: usize,
    max_value: u32,
    prefix: Vec<u32>,
    frames: Vec<Frame>,
}

impl KraftOneSequences {
    fn new(min_len: usize, max_len: usize, max_value: u32) -> Self {
        let frames = if max_len >= 1 && min_len <= max_len {
            vec![Frame {
                remaining: Dyadic::one(),
                next_value: 0,
            }]
        } else {
            Vec::new()
        };
        KraftOneSequences {
            min_len: min_len.max(1),
            max_len,
            max_value,
            prefix: Vec::new(),
            frames,
        }
    }

    fn feasible(&self, remaining: &Dyadic, placed: usize) -> bool {
        let units = remaining.mul_pow2(self.max_value as u64);
        let Some(units) = units.to_integer() else {
            return false;
        };
        let slots = (self.max_len - placed) as u64;
        let needed = self.min_len.saturating_sub(placed) as u64;
        units.count_ones() <= slots && *units >= needed.into()
    }
}

impl Iterator for KraftOneSequences {
    type Item = LengthSeq;

    fn next(&mut self) -> Option<LengthSeq> {
        loop {
            let frame = self.frames.last_mut()?;
            if frame.next_value > self.max_value {
                self.frames.pop();
                self.prefix.pop();
                continue;
            }
            let value = frame.next_value;
            frame.next_value += 1;
            let Some(rest) = frame.remaining.checked_sub(&Dyadic::pow2_neg(value as u64)) else {
                continue;
            };
            let placed = self.prefix.len() + 1;
            if rest.is_zero() {
                if placed >= self.min_len {
                    let mut out = self.prefix.clone();
                    out.push(value);
                    return Some(LengthSeq::new(out).expect("non-empty"));
                }
                continue;
            }
            if self.feasible(&rest, placed) {
                self.prefix.push(value);
                self.frames.push(Frame {
                    remaining: rest,
                    next_value: 0,
                });
            }
        }
    }
}

/// Every sequence with `1 <= n <= max_len`, values `<= max_value` and Kraft
/// sum exactly 1, each once, in lexicographic order.
pub fn enumerate_kraft_one_sequences(max_len: usize, max_value: u32) -> KraftOneSequences {
    KraftOneSequences::new(1, max_len, max_value)
}

/// As [`enumerate_kraft_one_sequences`], restricted to length exactly `n`.
pub fn enumerate_kraft_one_sequences_of_len(n: usize, max_value: u32) -> KraftOneSequences {
    KraftOneSequences::new(n, n, max_value)
}

/// Upper bound on the work of [`theorem_crosscheck`]: for each length `n`,
/// the trees with `n` leaves plus a bound on the Kraft-one sequences, which
/// are rearrangements of tree sequences and draw from `max_value + 1` values.
pub fn projected_work(max_len: usize, max_value: u32) -> u128 {
    let mut total: u128 = 0;
    let mut factorial: u128 = 1;
    for n in 1..=max_len {
        factorial = factorial.saturating_mul(n as u128);
        let trees = catalan(n - 1);
        let rearrangements = trees.saturating_mul(factorial);
        let words = (max_value as u128 + 1).saturating_pow(n.min(u32::MAX as usize) as u32);
        total = total
            .saturating_add(trees)
            .saturating_add(rearrangements.min(words));
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthReport {
    pub n: usize,
    /// Sequences of length `n` with Kraft sum 1.
    pub candidates: usize,
    /// Candidates accepted by the validator.
    pub accepted: usize,
    /// Trees with `n` leaves and depth at most `max_value`.
    pub trees: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Discrepancy {
    /// Accepted by the validator, but no tree has these path lengths.
    AcceptedWithoutTree(LengthSeq),
    /// Path lengths of a tree, but rejected by the validator.
    TreeRejected(LengthSeq),
    /// Two enumerated trees share a path-length sequence.
    DuplicateTreeSequence(LengthSeq),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub max_len: usize,
    pub max_value: u32,
    pub per_length: Vec<LengthReport>,
    pub accepted: Vec<LengthSeq>,
    pub rejected: Vec<LengthSeq>,
    pub counterexample: Option<Discrepancy>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct LengthOutcome {
    report: LengthReport,
    accepted: Vec<LengthSeq>,
    rejected: Vec<LengthSeq>,
    counterexample: Option<Discrepancy>,
}

fn check_length(n: usize, max_value: u32) -> LengthOutcome {
    let mut from_trees: BTreeSet<LengthSeq> = BTreeSet::new();
    let mut trees = 0;
    let mut duplicate = None;
    for tree in enumerate_trees(n).expect("n >= 1") {
        let seq = path_lengths(&tree);
        if seq.max_value() > max_value {
            continue;
        }
        trees += 1;
        if !from_trees.insert(seq.clone()) && duplicate.is_none() {
            duplicate = Some(Discrepancy::DuplicateTreeSequence(seq));
        }
    }

    let mut accepted = Vec::new();
    let mut rejected = Vec::new();
    let mut candidates = 0;
    for seq in enumerate_kraft_one_sequences_of_len(n, max_value) {
        candidates += 1;
        if validate(&seq).is_valid() {
            accepted.push(seq);
        } else {
            rejected.push(seq);
        }
    }

    let accepted_set: BTreeSet<&LengthSeq> = accepted.iter().collect();
    let missing = accepted.iter().find(|s| !from_trees.contains(*s)).cloned();
    let extra = from_trees
        .iter()
        .find(|s| !accepted_set.contains(s))
        .cloned();
    let counterexample = match (missing, extra) {
        (Some(a), Some(b)) if b < a => Some(Discrepancy::TreeRejected(b)),
        (Some(a), _) => Some(Discrepancy::AcceptedWithoutTree(a)),
        (None, Some(b)) => Some(Discrepancy::TreeRejected(b)),
        (None, None) => duplicate,
    };
    LengthOutcome {
        report: LengthReport {
            n,
            candidates,
            accepted: accepted.len(),
            trees,
        },
        accepted,
        rejected,
        counterexample,
    }
}

/// Compare the sequences the validator accepts with the path lengths of
/// all enumerated trees, for every `n <= max_len` and values `<= max_value`.
///
/// Each length runs on its own thread; results are merged in order of `n`.
pub fn theorem_crosscheck(max_len: usize, max_value: u32) -> Result<CrosscheckReport> {
    if max_len < 1 {
        return Err(Error::NoLeaves);
    }
    let outcomes: Vec<LengthOutcome> = thread::scope(|scope| {
        let handles: Vec<_> = (1..=max_len)
            .map(|n| scope.spawn(move || check_length(n, max_value)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("crosscheck worker panicked"))
            .collect()
    });

    let mut report = CrosscheckReport {
        max_len,
        max_value,
        per_length: Vec::with_capacity(max_len),
        accepted: Vec::new(),
        rejected: Vec::new(),
        counterexample: None,
    };
    for outcome in outcomes {
        report.per_length.push(outcome.report);
        report.accepted.extend(outcome.accepted);
        report.rejected.extend(outcome.rejected);
        if report.counterexample.is_none() {
            report.counterexample = outcome.counterexample;
        }
    }
    report.accepted.sort();
    report.rejected.sort();
    Ok(report)
}
