//! Text, JSON and DOT renderings.

use std::fmt::Write as _;

use crate::islands::{IslandNode, IslandTree};
use crate::tree::{BinTree, Node};
use crate::treebuild::codewords;

/// `[i,j] min=.. m=.. K=.. scaled=..`
pub fn island_summary(node: &IslandNode) -> String {
    format!(
        "{} min={} m={} K={} scaled={}",
        node.seg,
        node.seg_min,
        node.m,
        node.kraft,
        node.scaled_kraft()
    )
}

/// Island tree as text, two spaces of indentation per level.
pub fn island_tree_text(tree: &IslandTree) -> String {
    let mut out = String::new();
    let mut depths: Vec<usize> = Vec::with_capacity(tree.len());
    for node in tree.nodes() {
        let depth = node.parent.map_or(0, |p| depths[p] + 1);
        depths.push(depth);
        let _ = writeln!(out, "{}{}", "  ".repeat(depth), island_summary(node));
    }
    out
}

pub fn island_tree_dot(tree: &IslandTree) -> String {
    let mut out = String::from("digraph islands {\n  node [shape=box];\n");
    for node in tree.nodes() {
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{}\"];",
            node.seg,
            island_summary(node)
        );
        if let Some(p) = node.parent {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", tree.node(p).seg, node.seg);
        }
    }
    out.push_str("}\n");
    out
}

/// Compact JSON tree document with leaves numbered left to right.
pub fn tree_json(tree: &BinTree) -> String {
    enum Step {
        Visit(usize),
        Text(&'static str),
    }
    let mut out = String::new();
    let mut next_leaf = 1;
    let mut stack = vec![Step::Visit(tree.root())];
    while let Some(step) = stack.pop() {
        match step {
            Step::Text(s) => out.push_str(s),
            Step::Visit(id) => match tree.node(id) {
                Node::Leaf => {
                    let _ = write!(out, "{{\"leaf\":{next_leaf}}}");
                    next_leaf += 1;
                }
                Node::Internal { left, right } => {
                    stack.push(Step::Text("}"));
                    stack.push(Step::Visit(right));
                    stack.push(Step::Text(",\"right\":"));
                    stack.push(Step::Visit(left));
                    stack.push(Step::Text("{\"left\":"));
                }
            },
        }
    }
    out.push('\n');
    out
}

/// DOT digraph; node ids are codeword prefixes, with `ε` for the root.
pub fn tree_dot(tree: &BinTree) -> String {
    let mut out = String::from("digraph tree {\n  node [shape=circle, label=\"\"];\n");
    let mut next_leaf = 1;
    let mut stack: Vec<(usize, String)> = vec![(tree.root(), String::new())];
    while let Some((id, path)) = stack.pop() {
        let name = if path.is_empty() { "ε" } else { path.as_str() };
        match tree.node(id) {
            Node::Leaf => {
                let _ = writeln!(out, "  \"{name}\" [shape=box, label=\"v{next_leaf}\"];");
                next_leaf += 1;
            }
            Node::Internal { left, right } => {
                let _ = writeln!(out, "  \"{name}\";");
                stack.push((right, format!("{path}1")));
                stack.push((left, format!("{path}0")));
            }
        }
        if let Some(bit) = path.chars().last() {
            let parent = &path[..path.len() - 1];
            let parent = if parent.is_empty() { "ε" } else { parent };
            let _ = writeln!(out, "  \"{parent}\" -> \"{name}\" [label=\"{bit}\"];");
        }
    }
    out.push_str("}\n");
    out
}

/// One codeword per line.
pub fn tree_codes(tree: &BinTree) -> String {
    let mut out = String::new();
    for word in codewords(tree) {
        let _ = writeln!(out, "{word}");
    }
    out
}
