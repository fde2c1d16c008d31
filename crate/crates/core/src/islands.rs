//! Full segments (islands) and the tree they form under inclusion.
//!
//! A segment is an island when its minimum is strictly larger than its
//! neighborhood maximin. For a segment other than `[1,n]` that means both
//! of its outside neighbors are smaller than every value inside it, so the
//! islands are exactly the maximal runs of `{k : l_k >= v}` for `v >= 1`.
//! Two islands are therefore either disjoint or nested.
//!
//! Island lists are returned in preorder of the containment forest:
//! ascending `lo`, and for equal `lo` the wider segment first.

use crate::dyadic::Dyadic;
use crate::error::Result;
use crate::sequence::{maximin_with_min, LengthSeq, Segment};

/// `true` iff `maximin(seq, seg) < min(seq over seg)`.
pub fn is_full_segment(seq: &LengthSeq, seg: Segment) -> Result<bool> {
    let seg_min = seq.slice(seg)?.iter().copied().min().unwrap_or(0);
    Ok(maximin_with_min(seq, seg, seg_min) < seg_min)
}

/// Every island, found by testing all `n(n+1)/2` segments.
///
/// Quadratic; kept as the reference the sweep is checked against.
pub fn find_islands_naive(seq: &LengthSeq) -> Vec<Segment> {
    let n = seq.len();
    let mut out = Vec::new();
    for lo in 1..=n {
        let mut run_min = u32::MAX;
        let start = out.len();
        for hi in lo..=n {
            run_min = run_min.min(seq.at(hi));
            let seg = Segment { lo, hi };
            if maximin_with_min(seq, seg, run_min) < run_min {
                out.push(seg);
            }
        }
        out[start..].reverse();
    }
    out
}

/// Every island, in one left-to-right monotonic-stack sweep.
pub fn find_islands_fast(seq: &LengthSeq) -> Vec<Segment> {
    find_islands_fast_counted(seq).0
}

/// Upper bound on `ops / n` reported by [`find_islands_fast_counted`]
/// (for `n >= 1`): one step per position plus the sentinel, and at most
/// `n` each of pushes, pops, emitted islands, bucket heads and bucket walks.
pub const FAST_OPS_PER_ELEMENT: u64 = 7;

/// [`find_islands_fast`] plus the number of elementary steps taken.
///
/// The stack holds `(level, start)` pairs with strictly increasing levels
/// and strictly increasing starts: the run of values `>= level` that is
/// still open began at `start`. A strict descent closes every level above
/// the new value and each closed level is one island. Equal values merge
/// into the open level.
pub fn find_islands_fast_counted(seq: &LengthSeq) -> (Vec<Segment>, u64) {
    let n = seq.len();
    let mut ops: u64 = 0;
    let mut stack: Vec<(u32, usize)> = Vec::new();
    // Islands are emitted innermost-first; bucket them by `lo`, newest at the
    // head, so that walking a bucket yields wider segments first.
    let mut emitted: Vec<Segment> = Vec::new();
    let mut next_in_bucket: Vec<usize> = Vec::new();
    let mut bucket_head = vec![usize::MAX; n + 2];

    for k in 1..=n + 1 {
        ops += 1;
        let incoming = (k <= n).then(|| seq.at(k));
        let mut start = k;
        while let Some(&(level, open_at)) = stack.last() {
            if incoming.is_some_and(|x| level <= x) {
                break;
            }
            stack.pop();
            ops += 1;
            // A level-0 run can only be the whole sequence, whose maximin is 0.
            if level >= 1 {
                emitted.push(Segment {
                    lo: open_at,
                    hi: k - 1,
                });
                next_in_bucket.push(bucket_head[open_at]);
                bucket_head[open_at] = emitted.len() - 1;
                ops += 1;
            }
            start = open_at;
        }
        if let Some(x) = incoming {
            if stack.last().is_none_or(|&(level, _)| level < x) {
                stack.push((x, start));
                ops += 1;
            }
        }
    }

    let mut out = Vec::with_capacity(emitted.len());
    for head in bucket_head.iter().take(n + 1).skip(1) {
        ops += 1;
        let mut cursor = *head;
        while cursor != usize::MAX {
            ops += 1;
            out.push(emitted[cursor]);
            cursor = next_in_bucket[cursor];
        }
    }
    (out, ops)
}

/// An island with its annotations and its place in the island tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IslandNode {
    pub seg: Segment,
    /// Minimum of the sequence over `seg`.
    pub seg_min: u32,
    /// Neighborhood maximin `m(S)`.
    pub m: u32,
    /// Partial Kraft sum `K(S)`.
    pub kraft: Dyadic,
    pub parent: Option<usize>,
    /// Indices of the child islands, left to right.
    pub children: Vec<usize>,
}

impl IslandNode {
    /// `2^m(S) * K(S)`.
    pub fn scaled_kraft(&self) -> Dyadic {
        self.kraft.mul_pow2(self.m as u64)
    }

    pub fn is_minimal(&self) -> bool {
        self.children.is_empty()
    }
}

/// Nest and annotate islands given in preorder.
///
/// Works for any laminar family in preorder. The result is a forest in the
/// same order; each node's minimum and Kraft sum are assembled from its
/// children and the positions no child covers, so the total work is linear
/// in `n` plus the number of segments.
pub fn annotate_islands(seq: &LengthSeq, segs: &[Segment]) -> Vec<IslandNode> {
    let mut nodes: Vec<IslandNode> = Vec::with_capacity(segs.len());
    let mut open: Vec<usize> = Vec::new();
    for &seg in segs {
        while let Some(&top) = open.last() {
            if nodes[top].seg.contains(&seg) {
                break;
            }
            open.pop();
        }
        let parent = open.last().copied();
        let idx = nodes.len();
        if let Some(p) = parent {
            nodes[p].children.push(idx);
        }
        nodes.push(IslandNode {
            seg,
            seg_min: 0,
            m: 0,
            kraft: Dyadic::zero(),
            parent,
            children: Vec::new(),
        });
        open.push(idx);
    }

    for idx in (0..nodes.len()).rev() {
        let seg = nodes[idx].seg;
        let mut seg_min = u32::MAX;
        let mut kraft = Dyadic::zero();
        let mut uncovered: Vec<u32> = Vec::new();
        let mut pos = seg.lo;
        for &c in &nodes[idx].children {
            let child = &nodes[c];
            uncovered.extend((pos..child.seg.lo).map(|k| seq.at(k)));
            seg_min = seg_min.min(child.seg_min);
            kraft += &child.kraft;
            pos = child.seg.hi + 1;
        }
        uncovered.extend((pos..=seg.hi).map(|k| seq.at(k)));
        if let Some(&u) = uncovered.iter().min() {
            seg_min = seg_min.min(u);
        }
        kraft += Dyadic::kraft_sum_of(uncovered);
        let node = &mut nodes[idx];
        node.seg_min = seg_min;
        node.m = maximin_with_min(seq, seg, seg_min);
        node.kraft = kraft;
    }
    nodes
}

/// The tree of full segments, rooted at `[1,n]`.
///
/// Nodes are stored in preorder; the root is node 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IslandTree {
    nodes: Vec<IslandNode>,
}

impl IslandTree {
    pub fn root(&self) -> &IslandNode {
        &self.nodes[0]
    }

    pub fn nodes(&self) -> &[IslandNode] {
        &self.nodes
    }

    pub fn node(&self, idx: usize) -> &IslandNode {
        &self.nodes[idx]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.nodes.iter().map(|node| node.seg)
    }

    /// Index of the island with segment `seg`, if there is one.
    pub fn find(&self, seg: Segment) -> Option<usize> {
        self.nodes
            .binary_search_by_key(&seg.preorder_key(), |node| node.seg.preorder_key())
            .ok()
    }

    /// Depth of node `idx` below the root, with iterative parent walking.
    pub fn depth_of(&self, mut idx: usize) -> usize {
        let mut depth = 0;
        while let Some(p) = self.nodes[idx].parent {
            depth += 1;
            idx = p;
        }
        depth
    }

    /// Indices of the leaves of the tree, left to right.
    pub fn minimal_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].is_minimal())
    }
}

/// The island tree of `seq`, or `None` when `[1,n]` is not an island.
pub fn island_tree(seq: &LengthSeq) -> Option<IslandTree> {
    island_tree_from(seq, &find_islands_fast(seq))
}

/// [`island_tree`] over a precomputed preorder island list.
pub fn island_tree_from(seq: &LengthSeq, islands: &[Segment]) -> Option<IslandTree> {
    if islands.first() != Some(&seq.full()) {
        return None;
    }
    Some(IslandTree {
        nodes: annotate_islands(seq, islands),
    })
}

/// Leaves of the island tree, left to right.
pub fn minimal_islands(tree: &IslandTree) -> Vec<Segment> {
    tree.minimal_indices().map(|i| tree.node(i).seg).collect()
}
