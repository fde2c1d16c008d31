//! Property checks shared by the property tests and the acceptance suite.
//! Each returns a description of the first violation it finds.

use std::collections::BTreeSet;

use pathlen::islands::{annotate_islands, IslandTree};
use pathlen::treebuild::{
    codewords_from_prefix_sums, reconstruct_by_contraction, ContractionOrder,
};
use pathlen::{
    ancestors_at_level, codewords, contract, find_islands_fast, find_islands_naive, island_tree,
    maximin, minimal_islands, partial_kraft, path_lengths, reconstruct, reindex, validate,
    LengthSeq, Segment,
};

pub type Check = Result<(), String>;

/// Islands by the literal definition: the maximum over all proper
/// superintervals of their minimum must be below the segment's minimum.
pub fn literal_islands(seq: &LengthSeq) -> Vec<Segment> {
    let n = seq.len();
    let min_of = |lo: usize, hi: usize| *seq.values()[lo - 1..hi].iter().min().unwrap();
    let mut out = Vec::new();
    for lo in 1..=n {
        for hi in lo..=n {
            let mut best: Option<u32> = None;
            for h in 1..=lo {
                for k in hi..=n {
                    if (h, k) != (lo, hi) {
                        best = best.max(Some(min_of(h, k)));
                    }
                }
            }
            if best.unwrap_or(0) < min_of(lo, hi) {
                out.push(Segment { lo, hi });
            }
        }
    }
    out.sort_by_key(Segment::preorder_key);
    out
}

/// Laminarity, fast = naive, count bound and minimal-island constancy.
pub fn island_structure(seq: &LengthSeq) -> Check {
    let fast = find_islands_fast(seq);
    let naive = find_islands_naive(seq);
    if fast != naive {
        return Err(format!("{seq}: fast {fast:?} != naive {naive:?}"));
    }
    for (a, x) in fast.iter().enumerate() {
        for y in &fast[a + 1..] {
            if !(x.is_disjoint(y) || x.contains(y) || y.contains(x)) {
                return Err(format!("{seq}: islands {x} and {y} cross"));
            }
        }
    }
    if fast.len() > 2 * seq.len() - 1 {
        return Err(format!("{seq}: {} islands exceed 2n-1", fast.len()));
    }
    for node in annotate_islands(seq, &fast) {
        let run = seq.slice(node.seg).unwrap();
        if node.is_minimal() && run.iter().any(|&v| v != run[0]) {
            return Err(format!(
                "{seq}: minimal island {} is not constant",
                node.seg
            ));
        }
        if node.m != maximin(seq, node.seg).unwrap()
            || node.kraft != partial_kraft(seq, node.seg).unwrap()
        {
            return Err(format!(
                "{seq}: annotations of {} disagree with direct computation",
                node.seg
            ));
        }
    }
    Ok(())
}

/// For every island `S`: ancestors at level `m(S)` of its leaves equals
/// `2^m(S) K(S)`, counted both on the tree and as distinct codeword prefixes.
pub fn ancestor_law(seq: &LengthSeq) -> Check {
    let tree = reconstruct(seq).map_err(|e| format!("{seq}: {e}"))?;
    let words = codewords(&tree);
    let Some(islands) = island_tree(seq) else {
        return Ok(());
    };
    for node in islands.nodes() {
        let expected = node.scaled_kraft();
        let counted = ancestors_at_level(&tree, node.m, node.seg).map_err(|e| e.to_string())?;
        let prefixes: BTreeSet<&[bool]> = words[node.seg.lo - 1..node.seg.hi]
            .iter()
            .map(|w| &w.bits[..node.m as usize])
            .collect();
        if expected.to_u64() != Some(counted) || prefixes.len() as u64 != counted {
            return Err(format!(
                "{seq}: island {} has 2^m K = {expected}, {counted} ancestors, {} prefixes",
                node.seg,
                prefixes.len()
            ));
        }
    }
    Ok(())
}

/// Both round trips, both contraction orders, and the codebook properties.
pub fn round_trip(seq: &LengthSeq) -> Check {
    let tree = reconstruct(seq).map_err(|e| format!("{seq}: {e}"))?;
    if &path_lengths(&tree) != seq {
        return Err(format!(
            "{seq}: rebuilt tree reads back as {}",
            path_lengths(&tree)
        ));
    }
    for order in [ContractionOrder::Leftmost, ContractionOrder::Rightmost] {
        let stepwise = reconstruct_by_contraction(seq, order).map_err(|e| e.to_string())?;
        if stepwise != tree {
            return Err(format!(
                "{seq}: {order:?} contraction gives {stepwise}, direct gives {tree}"
            ));
        }
    }
    let words = codewords(&tree);
    if words != codewords_from_prefix_sums(seq) {
        return Err(format!(
            "{seq}: tree codewords differ from prefix-sum codewords"
        ));
    }
    for (k, pair) in words.windows(2).enumerate() {
        if pair[0] >= pair[1] || pair[0].is_prefix_of(&pair[1]) {
            return Err(format!(
                "{seq}: codewords {} and {} out of order or nested",
                k + 1,
                k + 2
            ));
        }
    }
    if words
        .iter()
        .zip(seq.iter())
        .any(|(w, &l)| w.len() != l as usize)
    {
        return Err(format!("{seq}: codeword length mismatch"));
    }
    Ok(())
}

/// Contract the leftmost minimal island and check that `reindex` maps the
/// remaining islands onto those of `l'`, keeping Kraft sums, maximins and
/// the parent relation.
pub fn reindex_bijection(seq: &LengthSeq) -> Check {
    let Some(before) = island_tree(seq) else {
        return Ok(());
    };
    let contracted = minimal_islands(&before)[0];
    let step = contract(seq, contracted).map_err(|e| format!("{seq}: {e}"))?;
    let after: Option<IslandTree> = island_tree(&step.reduced);
    let after_len = after.as_ref().map_or(0, IslandTree::len);
    if after_len + 1 != before.len() {
        return Err(format!(
            "{seq}: {} islands before contracting {contracted}, {after_len} after",
            before.len()
        ));
    }
    let mut images = BTreeSet::new();
    for node in before.nodes().iter().filter(|n| n.seg != contracted) {
        let image = reindex(node.seg, contracted, step.r).map_err(|e| e.to_string())?;
        let Some(idx) = after.as_ref().and_then(|t| t.find(image)) else {
            return Err(format!(
                "{seq}: {} maps to {image}, which is not an island of {}",
                node.seg, step.reduced
            ));
        };
        let target = after.as_ref().unwrap().node(idx);
        if target.kraft != node.kraft || target.m != node.m {
            return Err(format!("{seq}: {} -> {image} changes K or m", node.seg));
        }
        let parent_image = node
            .parent
            .map(|p| reindex(before.node(p).seg, contracted, step.r).unwrap());
        let target_parent = target.parent.map(|p| after.as_ref().unwrap().node(p).seg);
        if parent_image != target_parent {
            return Err(format!("{seq}: parent of {} not preserved", node.seg));
        }
        images.insert(image);
    }
    if images.len() != after_len {
        return Err(format!("{seq}: reindex is not injective"));
    }
    // The contracted island was a leaf of the tree; its parent lost exactly one child.
    if let Some(p) = before.node(before.find(contracted).unwrap()).parent {
        let parent = before.node(p);
        let image = reindex(parent.seg, contracted, step.r).unwrap();
        let t = after.as_ref().unwrap();
        let now = t.node(t.find(image).unwrap()).children.len();
        if now + 1 != parent.children.len() {
            return Err(format!(
                "{seq}: parent {} did not lose exactly the contracted leaf",
                parent.seg
            ));
        }
    }
    Ok(())
}

/// validate with the fast detector, validate with the naive detector and
/// the prefix-alignment oracle all agree.
pub fn verdicts_agree(seq: &LengthSeq) -> Check {
    let fast = validate(seq);
    let naive = pathlen::validator::validate_with(seq, find_islands_naive);
    let aligned = pathlen::validate_prefix_alignment(seq);
    if fast != naive || fast.is_valid() != aligned {
        return Err(format!(
            "{seq}: validate {:?}, naive-detector validate {:?}, prefix alignment {aligned}",
            fast, naive
        ));
    }
    Ok(())
}
