//! Rebuilding the unique tree of a valid sequence, and reading trees back.
//!
//! The construction works on minimal islands. A minimal island `S=[i,j]` is
//! a constant run; replacing it by `r = 2^m(S) K(S)` copies of `m(S)` gives a
//! shorter valid sequence `l'` whose island tree is that of `l` with `S`
//! removed. Once the tree for `l'` is known, each of the `r` leaves starting
//! at leaf `i` gets a perfect subtree of depth `l_i - m(S)`.

use std::fmt;

use num_bigint::BigUint;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::islands::{annotate_islands, find_islands_fast, island_tree, IslandNode, IslandTree};
use crate::sequence::{LengthSeq, Segment};
use crate::tree::{BinTree, Node, TreeBuilder};
use crate::validator::{validate, Verdict, Witness};

/// Result of contracting one minimal island.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractResult {
    /// The contracted sequence `l'`.
    pub reduced: LengthSeq,
    /// Number of copies of `m(S)` that replace the run.
    pub r: usize,
    /// 1-based position where the replacement run begins.
    pub site: usize,
}

/// Replace the minimal island `seg` of `seq` by `2^m K` copies of `m`.
pub fn contract(seq: &LengthSeq, seg: Segment) -> Result<ContractResult> {
    seg.check_within(seq.len())?;
    let islands = annotate_islands(seq, &find_islands_fast(seq));
    let node = islands
        .iter()
        .find(|node| node.seg == seg)
        .ok_or(Error::NotAnIsland(seg))?;
    if !node.is_minimal() {
        return Err(Error::NotMinimal(seg));
    }
    contract_node(seq, node)
}

fn contract_node(seq: &LengthSeq, node: &IslandNode) -> Result<ContractResult> {
    let seg = node.seg;
    let r = repetitions(node)?;
    let run = seq.slice(seg)?;
    if run.iter().any(|&v| v != node.seg_min) {
        return Err(Error::Invariant(format!(
            "minimal island {seg} is not a constant run"
        )));
    }
    let values = seq.values();
    let mut reduced = Vec::with_capacity(values.len() - seg.len() + r);
    reduced.extend_from_slice(&values[..seg.lo - 1]);
    reduced.extend(std::iter::repeat_n(node.m, r));
    reduced.extend_from_slice(&values[seg.hi..]);
    Ok(ContractResult {
        reduced: LengthSeq::new(reduced)?,
        r,
        site: seg.lo,
    })
}

/// `2^m(S) K(S)` as a count, or the validity witness when it is fractional.
fn repetitions(node: &IslandNode) -> Result<usize> {
    let scaled = node.scaled_kraft();
    if !scaled.is_integer() {
        return Err(Error::Invalid(Witness::NonIntegerScaledKraft {
            seg: node.seg,
            m: node.m,
            kraft: node.kraft.clone(),
        }));
    }
    // Each term 2^(m - l_k) is at most 1/2, so r < |S|.
    let r = scaled
        .to_u64()
        .and_then(|r| usize::try_from(r).ok())
        .filter(|&r| r >= 1 && r <= node.seg.len())
        .ok_or_else(|| Error::Invariant(format!("island {} scales to {scaled}", node.seg)))?;
    Ok(r)
}

/// Where an island `seg` of `l` lands in `l'` after `contracted` is
/// replaced by `r` values.
pub fn reindex(seg: Segment, contracted: Segment, r: usize) -> Result<Segment> {
    let undefined = || Error::ReindexUndefined { seg, contracted };
    if seg == contracted || r == 0 {
        return Err(undefined());
    }
    let removed = contracted.len();
    if seg.hi < contracted.lo {
        Ok(seg)
    } else if contracted.hi < seg.lo {
        Ok(Segment {
            lo: seg.lo - removed + r,
            hi: seg.hi - removed + r,
        })
    } else if seg.contains(&contracted) {
        Ok(Segment {
            lo: seg.lo,
            hi: seg.hi - removed + r,
        })
    } else {
        Err(undefined())
    }
}

/// The unique topological binary tree whose path-length sequence is `seq`.
///
/// Walks the island tree top down. The root island contracts to a single
/// leaf; every island, once its parent has been expanded, owns `r` leaves
/// at depth `m(S)` and grows a perfect subtree of depth `min(S) - m(S)` on
/// each. The resulting slots, left to right, are the positions of `S` not
/// covered by a child island (final leaves) interleaved with each child's
/// own run of `r` slots. This performs every contraction of the inductive
/// construction at once, in time linear in the size of the tree.
pub fn reconstruct(seq: &LengthSeq) -> Result<BinTree> {
    if let Verdict::Invalid(w) = validate(seq) {
        return Err(Error::Invalid(w));
    }
    let Some(islands) = island_tree(seq) else {
        return single_leaf(seq);
    };

    let mut builder = TreeBuilder::new();
    let mut work: Vec<(usize, Vec<usize>)> = vec![(0, vec![builder.root()])];
    while let Some((idx, owned)) = work.pop() {
        let node = islands.node(idx);
        let depth = node.seg_min - node.m;
        let slots: Vec<usize> = owned
            .into_iter()
            .flat_map(|leaf| builder.grow_perfect(leaf, depth))
            .collect();

        let mut cursor = 0;
        let mut pos = node.seg.lo;
        for &c in &node.children {
            let child = islands.node(c);
            if child.m != node.seg_min {
                return Err(Error::Invariant(format!(
                    "island {} sits at level {} inside {} of minimum {}",
                    child.seg, child.m, node.seg, node.seg_min
                )));
            }
            cursor += child.seg.lo - pos;
            let r = repetitions(child)?;
            let Some(owned) = slots.get(cursor..cursor + r) else {
                return Err(Error::Invariant(format!(
                    "island {} runs past the slots of {}",
                    child.seg, node.seg
                )));
            };
            work.push((c, owned.to_vec()));
            cursor += r;
            pos = child.seg.hi + 1;
        }
        cursor += node.seg.hi + 1 - pos;
        if cursor != slots.len() {
            return Err(Error::Invariant(format!(
                "island {} has {} slots for {} entries",
                node.seg,
                slots.len(),
                cursor
            )));
        }
    }
    Ok(builder.finish())
}

fn single_leaf(seq: &LengthSeq) -> Result<BinTree> {
    if seq.values() == [0] {
        Ok(BinTree::leaf())
    } else {
        Err(Error::Invariant(format!(
            "valid sequence {seq} has no island tree"
        )))
    }
}

/// Which minimal island [`reconstruct_by_contraction`] contracts next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContractionOrder {
    Leftmost,
    Rightmost,
}

/// [`reconstruct`] carried out one contraction at a time, recomputing the
/// island tree after every step. Quadratic; useful for checking that the
/// choice of minimal island does not matter.
pub fn reconstruct_by_contraction(seq: &LengthSeq, order: ContractionOrder) -> Result<BinTree> {
    if let Verdict::Invalid(w) = validate(seq) {
        return Err(Error::Invalid(w));
    }
    // (site, r, depth of the appended perfect trees)
    let mut steps: Vec<(usize, usize, u32)> = Vec::new();
    let mut current = seq.clone();
    let mut previous_size = usize::MAX;
    while let Some(tree) = island_tree(&current) {
        if tree.len() >= previous_size {
            return Err(Error::Invariant(format!(
                "island tree did not shrink at {current}"
            )));
        }
        previous_size = tree.len();
        let idx = pick_minimal(&tree, order);
        let node = tree.node(idx);
        let step = contract_node(&current, node)?;
        steps.push((step.site, step.r, node.seg_min - node.m));
        current = step.reduced;
    }
    single_leaf(&current)?;

    let mut builder = TreeBuilder::new();
    let mut leaves = vec![builder.root()];
    for &(site, r, depth) in steps.iter().rev() {
        let start = site - 1;
        let grown: Vec<usize> = leaves[start..start + r]
            .iter()
            .flat_map(|&leaf| builder.grow_perfect(leaf, depth))
            .collect();
        leaves.splice(start..start + r, grown);
    }
    if leaves.len() != seq.len() {
        return Err(Error::Invariant(
            "leaf count mismatch after unwinding".into(),
        ));
    }
    Ok(builder.finish())
}

fn pick_minimal(tree: &IslandTree, order: ContractionOrder) -> usize {
    let mut minimal = tree.minimal_indices();
    let pick = match order {
        ContractionOrder::Leftmost => minimal.next(),
        ContractionOrder::Rightmost => minimal.last(),
    };
    pick.expect("a non-empty island tree has a leaf")
}

/// Leaf depths, left to right.
pub fn path_lengths(tree: &BinTree) -> LengthSeq {
    LengthSeq::new(tree.leaf_depths()).expect("a tree has at least one leaf")
}

/// A root-to-leaf path; `false` is the left (0) branch.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    pub bits: Vec<bool>,
}

impl Codeword {
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_prefix_of(&self, other: &Codeword) -> bool {
        other.bits.starts_with(&self.bits)
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Root-to-leaf paths in left-to-right leaf order.
pub fn codewords(tree: &BinTree) -> Vec<Codeword> {
    let mut out = Vec::with_capacity(tree.leaf_count());
    let mut path: Vec<bool> = Vec::new();
    let mut stack: Vec<(usize, usize, Option<bool>)> = vec![(tree.root(), 0, None)];
    while let Some((id, depth, bit)) = stack.pop() {
        path.truncate(depth.saturating_sub(1));
        if let Some(b) = bit {
            path.push(b);
        }
        match tree.node(id) {
            Node::Leaf => out.push(Codeword { bits: path.clone() }),
            Node::Internal { left, right } => {
                stack.push((right, depth + 1, Some(true)));
                stack.push((left, depth + 1, Some(false)));
            }
        }
    }
    out
}

/// Codewords straight from the lengths: codeword `k` is the `l_k`-bit
/// binary expansion of `a_k = sum_{t<k} 2^-l_t`. Only meaningful for
/// valid sequences.
pub fn codewords_from_prefix_sums(seq: &LengthSeq) -> Vec<Codeword> {
    let mut prefix = Dyadic::zero();
    let mut out = Vec::with_capacity(seq.len());
    for &l in seq.iter() {
        let scaled = prefix.mul_pow2(l as u64);
        let value = scaled
            .to_integer()
            .cloned()
            .unwrap_or_else(BigUint::default);
        let bits = (0..l as u64).rev().map(|i| value.bit(i)).collect();
        out.push(Codeword { bits });
        prefix += Dyadic::pow2_neg(l as u64);
    }
    out
}

/// Number of distinct depth-`level` ancestors of leaves `v_i..v_j`
/// (a node at that depth is its own ancestor).
pub fn ancestors_at_level(tree: &BinTree, level: u32, leaves: Segment) -> Result<u64> {
    leaves.check_within(tree.leaf_count())?;
    let mut leaf_index = 0usize;
    let mut current: Option<usize> = None;
    let mut last_counted: Option<usize> = None;
    let mut count = 0u64;
    let mut failure = None;
    tree.walk(|id, depth| {
        if depth == level {
            current = Some(id);
        }
        if tree.node(id) != Node::Leaf {
            return;
        }
        leaf_index += 1;
        if leaf_index < leaves.lo || leaf_index > leaves.hi || failure.is_some() {
            return;
        }
        if depth < level {
            failure = Some(Error::LeafAboveLevel {
                leaf: leaf_index,
                depth,
                level,
            });
            return;
        }
        if current != last_counted {
            count += 1;
            last_counted = current;
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(count),
    }
}
