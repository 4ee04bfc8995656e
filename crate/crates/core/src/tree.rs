//! Planar binary trees and the maps ρ_b, ρ_t.

use std::fmt;

use serde::Serialize;

use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Top,
    Bottom,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Leaf,
    Internal(Box<Node>, Box<Node>),
}

impl Node {
    pub fn size(&self) -> usize {
        match self {
            Node::Leaf => 0,
            Node::Internal(l, r) => 1 + l.size() + r.size(),
        }
    }

    fn encode_into(&self, out: &mut String) {
        if let Node::Internal(l, r) = self {
            out.push('(');
            l.encode_into(out);
            out.push(')');
            r.encode_into(out);
        }
    }
}

/// A planar binary tree with `n` internal nodes and `n + 1` leaves.
/// Internal nodes are numbered `1..=n` in order; leaves `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarBinaryTree {
    pub orientation: Orientation,
    pub root: Node,
}

impl PlanarBinaryTree {
    pub fn n(&self) -> usize {
        self.root.size()
    }

    /// Balanced parentheses: an internal node is `(` left `)` right.
    pub fn encode(&self) -> String {
        let mut s = String::new();
        self.root.encode_into(&mut s);
        s
    }

    pub fn decode(code: &str, orientation: Orientation) -> Option<Self> {
        fn parse(b: &[u8], pos: &mut usize) -> Option<Node> {
            if *pos < b.len() && b[*pos] == b'(' {
                *pos += 1;
                let left = parse(b, pos)?;
                if *pos >= b.len() || b[*pos] != b')' {
                    return None;
                }
                *pos += 1;
                let right = parse(b, pos)?;
                Some(Node::Internal(Box::new(left), Box::new(right)))
            } else {
                Some(Node::Leaf)
            }
        }
        let b = code.as_bytes();
        let mut pos = 0;
        let root = parse(b, &mut pos)?;
        (pos == b.len()).then_some(PlanarBinaryTree { orientation, root })
    }

    /// Leaf interval `[a, b]` below each internal node, indexed by the
    /// node's in-order number minus one.
    pub fn spans(&self) -> Vec<(usize, usize)> {
        fn walk(node: &Node, first: usize, out: &mut [(usize, usize)]) -> usize {
            match node {
                Node::Leaf => first,
                Node::Internal(l, r) => {
                    let mid = walk(l, first, out);
                    let last = walk(r, mid + 1, out);
                    out[mid] = (first, last);
                    last
                }
            }
        }
        let mut out = vec![(0, 0); self.n()];
        walk(&self.root, 0, &mut out);
        out
    }

    /// All trees with `n` internal nodes, in encoding order.
    pub fn all(n: usize, orientation: Orientation) -> Vec<PlanarBinaryTree> {
        fn build(n: usize) -> Vec<Node> {
            if n == 0 {
                return vec![Node::Leaf];
            }
            let mut out = Vec::new();
            for k in 0..n {
                for l in build(k) {
                    for r in build(n - 1 - k) {
                        out.push(Node::Internal(Box::new(l.clone()), Box::new(r)));
                    }
                }
            }
            out
        }
        build(n).into_iter().map(|root| PlanarBinaryTree { orientation, root }).collect()
    }
}

impl fmt::Display for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl Serialize for PlanarBinaryTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PlanarBinaryTree", 3)?;
        st.serialize_field("orientation", &self.orientation)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("code", &self.encode())?;
        st.end()
    }
}

/// Binary search tree insertion of `seq`, first entry at the root.
fn bst(seq: &[u8]) -> Node {
    let Some((&root, rest)) = seq.split_first() else {
        return Node::Leaf;
    };
    let left: Vec<u8> = rest.iter().copied().filter(|&v| v < root).collect();
    let right: Vec<u8> = rest.iter().copied().filter(|&v| v > root).collect();
    Node::Internal(Box::new(bst(&left)), Box::new(bst(&right)))
}

/// `x_1` splits the leaves at gap `x_1`; recurse on each side.
pub fn rho_b(x: &Permutation) -> PlanarBinaryTree {
    PlanarBinaryTree { orientation: Orientation::Bottom, root: bst(x.word()) }
}

/// The last entry of `x` is the root split.
pub fn rho_t(x: &Permutation) -> PlanarBinaryTree {
    let rev: Vec<u8> = x.word().iter().rev().copied().collect();
    PlanarBinaryTree { orientation: Orientation::Top, root: bst(&rev) }
}

/// ρ_t built leaves-upward: reading `x` left to right, entry `g` joins the
/// subtrees holding leaves `g - 1` and `g`.
pub fn rho_t_leaves_upward(x: &Permutation) -> PlanarBinaryTree {
    let n = x.len();
    // owner[leaf] -> index into `forest`; each forest entry covers a leaf interval.
    let mut forest: Vec<Option<Node>> = (0..=n).map(|_| Some(Node::Leaf)).collect();
    let mut owner: Vec<usize> = (0..=n).collect();
    for &g in x.word() {
        let g = g as usize;
        let (a, b) = (owner[g - 1], owner[g]);
        let left = forest[a].take().expect("live subtree");
        let right = forest[b].take().expect("live subtree");
        forest[a] = Some(Node::Internal(Box::new(left), Box::new(right)));
        for o in owner.iter_mut() {
            if *o == b {
                *o = a;
            }
        }
    }
    let root = forest[owner[0]].take().expect("single tree remains");
    PlanarBinaryTree { orientation: Orientation::Top, root }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use std::collections::BTreeSet;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn single_node() {
        assert_eq!(rho_b(&perm("1")).encode(), "()");
        assert_eq!(rho_t(&perm("1")).encode(), "()");
        assert_eq!(rho_b(&Permutation::empty()).n(), 0);
    }

    #[test]
    fn small_images() {
        let tops: BTreeSet<_> = all_permutations(3).map(|x| rho_t(&x)).collect();
        assert_eq!(tops.len(), 5);
        // 231 -> 213 is a single Θ231 move, so they share a bottom tree
        assert_eq!(rho_b(&perm("213")), rho_b(&perm("231")));
        let bottoms: BTreeSet<_> = all_permutations(3).map(|x| rho_b(&x)).collect();
        assert_eq!(bottoms.len(), 5);
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(PlanarBinaryTree::all(n, Orientation::Top).len(), c);
        }
    }

    #[test]
    fn reversed_recursion_matches_leaves_upward() {
        for n in 0..=6 {
            for x in all_permutations(n) {
                assert_eq!(rho_t(&x), rho_t_leaves_upward(&x), "{x}");
            }
        }
    }

    #[test]
    fn example_encodings() {
        let x = perm("467198352");
        assert_eq!(rho_b(&x).encode(), "(()(()))(())()(())");
        assert_eq!(rho_t(&x).encode(), "(())(()())((()))()");
    }

    #[test]
    fn decode_round_trip_and_spans() {
        for t in PlanarBinaryTree::all(5, Orientation::Bottom) {
            let code = t.encode();
            assert_eq!(PlanarBinaryTree::decode(&code, Orientation::Bottom), Some(t.clone()));
            let spans = t.spans();
            assert_eq!(spans.len(), 5);
            for (v, &(a, b)) in spans.iter().enumerate() {
                assert!(a <= v && v < b, "node {} span {:?}", v + 1, (a, b));
            }
        }
        assert!(PlanarBinaryTree::decode("(()", Orientation::Top).is_none());
        // 12: root 1 with right child 2
        assert_eq!(rho_b(&perm("12")).spans(), vec![(0, 2), (1, 2)]);
        assert_eq!(rho_t(&perm("12")).spans(), vec![(0, 1), (0, 2)]);
    }
}
