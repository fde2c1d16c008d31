//! Topological binary trees.
//!
//! A [`BinTree`] is an arena of nodes laid out in preorder with the root at
//! index 0. Every constructor produces that layout, so two trees are equal
//! exactly when their shapes are. All traversals use explicit stacks; trees
//! far deeper than the thread stack are fine.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Leaf,
    Internal { left: usize, right: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinTree {
    nodes: Vec<Node>,
}

impl BinTree {
    pub fn leaf() -> Self {
        BinTree {
            nodes: vec![Node::Leaf],
        }
    }

    /// Internal root with `left` as the 0-branch and `right` as the 1-branch.
    pub fn join(left: BinTree, right: BinTree) -> Self {
        let offset_left = 1;
        let offset_right = 1 + left.nodes.len();
        let mut nodes = Vec::with_capacity(offset_right + right.nodes.len());
        nodes.push(Node::Internal {
            left: offset_left,
            right: offset_right,
        });
        nodes.extend(left.nodes.iter().map(|n| shifted(*n, offset_left)));
        nodes.extend(right.nodes.iter().map(|n| shifted(*n, offset_right)));
        BinTree { nodes }
    }

    /// Perfect tree with `2^depth` leaves, all at `depth`.
    pub fn perfect(depth: u32) -> Self {
        let mut builder = TreeBuilder::new();
        builder.grow_perfect(0, depth);
        builder.finish()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> Node {
        self.nodes[id]
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn is_leaf(&self) -> bool {
        self.nodes.len() == 1
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.len().div_ceil(2)
    }

    /// Visit every node in preorder with its depth; `visit(id, depth)`.
    pub fn walk(&self, mut visit: impl FnMut(usize, u32)) {
        let mut stack = vec![(0usize, 0u32)];
        while let Some((id, depth)) = stack.pop() {
            visit(id, depth);
            if let Node::Internal { left, right } = self.nodes[id] {
                stack.push((right, depth + 1));
                stack.push((left, depth + 1));
            }
        }
    }

    /// Leaf depths, left to right.
    pub fn leaf_depths(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.leaf_count());
        self.walk(|id, depth| {
            if self.nodes[id] == Node::Leaf {
                out.push(depth);
            }
        });
        out
    }
}

fn shifted(node: Node, by: usize) -> Node {
    match node {
        Node::Leaf => Node::Leaf,
        Node::Internal { left, right } => Node::Internal {
            left: left + by,
            right: right + by,
        },
    }
}

/// `(` left right `)` for internal nodes, `.` for leaves.
impl fmt::Display for BinTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        enum Step {
            Visit(usize),
            Close,
            Space,
        }
        let mut stack = vec![Step::Visit(0)];
        while let Some(step) = stack.pop() {
            match step {
                Step::Visit(id) => match self.nodes[id] {
                    Node::Leaf => f.write_str(".")?,
                    Node::Internal { left, right } => {
                        f.write_str("(")?;
                        stack.push(Step::Close);
                        stack.push(Step::Visit(right));
                        stack.push(Step::Space);
                        stack.push(Step::Visit(left));
                    }
                },
                Step::Close => f.write_str(")")?,
                Step::Space => f.write_str(" ")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinTree{self}")
    }
}

/// Mutable arena used while growing a tree leaf by leaf. Node ids are
/// stable but not in preorder until [`TreeBuilder::finish`].
#[derive(Debug)]
pub(crate) struct TreeBuilder {
    nodes: Vec<Node>,
}

impl TreeBuilder {
    pub(crate) fn new() -> Self {
        TreeBuilder {
            nodes: vec![Node::Leaf],
        }
    }

    pub(crate) fn root(&self) -> usize {
        0
    }

    /// Replace leaf `at` by a perfect tree of `depth` and return its new
    /// leaves, left to right. Depth 0 leaves `at` as it is.
    pub(crate) fn grow_perfect(&mut self, at: usize, depth: u32) -> Vec<usize> {
        debug_assert_eq!(self.nodes[at], Node::Leaf);
        let mut level = vec![at];
        for _ in 0..depth {
            let mut next = Vec::with_capacity(level.len() * 2);
            for id in level {
                let left = self.nodes.len();
                self.nodes.push(Node::Leaf);
                self.nodes.push(Node::Leaf);
                self.nodes[id] = Node::Internal {
                    left,
                    right: left + 1,
                };
                next.push(left);
                next.push(left + 1);
            }
            level = next;
        }
        level
    }

    /// Relabel into preorder.
    pub(crate) fn finish(self) -> BinTree {
        let mut nodes = Vec::with_capacity(self.nodes.len());
        // (builder id, slot in `nodes` of the parent's child pointer to patch)
        let mut stack: Vec<(usize, Option<(usize, bool)>)> = vec![(0, None)];
        while let Some((id, patch)) = stack.pop() {
            let new_id = nodes.len();
            if let Some((parent, is_left)) = patch {
                if let Node::Internal { left, right } = &mut nodes[parent] {
                    if is_left {
                        *left = new_id;
                    } else {
                        *right = new_id;
                    }
                }
            }
            match self.nodes[id] {
                Node::Leaf => nodes.push(Node::Leaf),
                Node::Internal { left, right } => {
                    nodes.push(Node::Internal { left: 0, right: 0 });
                    stack.push((right, Some((new_id, false))));
                    stack.push((left, Some((new_id, true))));
                }
            }
        }
        BinTree { nodes }
    }
}
