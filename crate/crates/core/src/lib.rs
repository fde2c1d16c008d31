//! Path-length sequences of topological binary trees.
//!
//! A sequence `l_1, ..., l_n` of non-negative integers is the left-to-right
//! leaf-depth sequence of some binary tree (equivalently, the lexicographic
//! length sequence of an instantaneous code) exactly when its Kraft sum is 1
//! and, for every island `S` of the sequence, `2^m(S) K(S)` is an integer.
//! The tree is then unique; [`treebuild::reconstruct`] builds it.

pub mod cli;
pub mod dyadic;
pub mod error;
pub mod islands;
pub mod oracle;
pub mod sequence;
pub mod tree;
pub mod treebuild;
pub mod validator;

pub use dyadic::Dyadic;
pub use error::{Error, Result};
pub use islands::{
    find_islands_fast, find_islands_naive, is_full_segment, island_tree, minimal_islands,
    IslandNode, IslandTree,
};
pub use oracle::{enumerate_kraft_one_sequences, enumerate_trees, theorem_crosscheck};
pub use sequence::{kraft_sum, maximin, partial_kraft, LengthSeq, Segment};
pub use tree::BinTree;
pub use treebuild::{
    ancestors_at_level, codewords, contract, path_lengths, reconstruct, reindex, Codeword,
    ContractResult,
};
pub use validator::{validate, validate_prefix_alignment, Verdict, Witness};
