use thiserror::Error;

use crate::sequence::Segment;
use crate::validator::Witness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a length sequence needs at least one value")]
    EmptySequence,

    #[error("[{lo},{hi}] is not a segment (need 1 <= lo <= hi)")]
    MalformedSegment { lo: usize, hi: usize },

    #[error("segment {seg} lies outside [1,{n}]")]
    SegmentOutOfRange { seg: Segment, n: usize },

    #[error("segment {0} is not an island")]
    NotAnIsland(Segment),

    #[error("island {0} is not minimal")]
    NotMinimal(Segment),

    #[error("reindexing {seg} around contracted island {contracted} is undefined")]
    ReindexUndefined { seg: Segment, contracted: Segment },

    #[error("leaf v{leaf} has depth {depth}, above level {level}")]
    LeafAboveLevel { leaf: usize, depth: u32, level: u32 },

    #[error("a tree needs at least one leaf")]
    NoLeaves,

    #[error("not a path-length sequence: {0}")]
    Invalid(Witness),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
