//! Palindromic tree (eertree) over V-palindromes.
//!
//! Identical to the classical structure except for the extension test: a
//! V-palindrome `q` preceded by `x` and followed by `c` is a V-palindrome iff
//! `x = tau(c)`. At the odd root (length -1) the "preceding" letter is `c`
//! itself, so single letters only become nodes when tau fixes them. When tau
//! has no fixed letter the odd root is never extended and a failed walk lands
//! on the even root.

use crate::antimorphism::Antimorphism;
use crate::words::Letter;

const ODD_ROOT: u32 = 0;
const EVEN_ROOT: u32 = 1;
const NIL: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct Node {
    len: i32,
    link: u32,
    first_edge: u32,
    next_sibling: u32,
    letter: Letter,
}

/// Append-only text together with the tree of its distinct V-palindromic factors.
#[derive(Debug, Clone)]
pub struct VPalTree {
    tau: Vec<Letter>,
    text: Vec<Letter>,
    nodes: Vec<Node>,
    // node of the longest V-palindromic suffix of `text`
    last: u32,
}

impl VPalTree {
    pub fn new(v: &Antimorphism) -> Self {
        let root = |len, link| Node {
            len,
            link,
            first_edge: NIL,
            next_sibling: NIL,
            letter: Letter::new(0),
        };
        VPalTree {
            tau: v.tau_table().to_vec(),
            text: Vec::new(),
            nodes: vec![root(-1, ODD_ROOT), root(0, ODD_ROOT)],
            last: EVEN_ROOT,
        }
    }

    pub fn with_capacity(v: &Antimorphism, capacity: usize) -> Self {
        let mut tree = Self::new(v);
        tree.text.reserve(capacity);
        tree.nodes.reserve(capacity);
        tree
    }

    pub fn text(&self) -> &[Letter] {
        &self.text
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    /// Length of the longest V-palindromic suffix of the text (0 for none).
    pub fn longest_suffix_len(&self) -> usize {
        self.nodes[self.last as usize].len.max(0) as usize
    }

    /// Number of distinct nonempty V-palindromic factors seen so far.
    pub fn distinct_count(&self) -> usize {
        self.nodes.len() - 2
    }

    fn child(&self, node: u32, c: Letter) -> Option<u32> {
        let mut e = self.nodes[node as usize].first_edge;
        while e != NIL {
            let n = &self.nodes[e as usize];
            if n.letter == c {
                return Some(e);
            }
            e = n.next_sibling;
        }
        None
    }

    // Can the V-palindrome at `node` be wrapped around the letter at `pos`?
    #[inline]
    fn fits(&self, node: u32, c: Letter, pos: usize) -> bool {
        let before = pos as i64 - 1 - self.nodes[node as usize].len as i64;
        before >= 0 && self.text[before as usize] == self.tau[c.index()]
    }

    fn find_extendable(&self, mut node: u32, c: Letter, pos: usize) -> Option<u32> {
        loop {
            if self.fits(node, c, pos) {
                return Some(node);
            }
            if node == ODD_ROOT {
                return None;
            }
            node = self.nodes[node as usize].link;
        }
    }

    pub fn push(&mut self, c: Letter) {
        self.text.push(c);
        let pos = self.text.len() - 1;
        let Some(q) = self.find_extendable(self.last, c, pos) else {
            self.last = EVEN_ROOT;
            return;
        };
        if let Some(existing) = self.child(q, c) {
            self.last = existing;
            return;
        }
        let len = self.nodes[q as usize].len + 2;
        // The longest proper V-palindromic suffix is also a prefix of the new
        // V-palindrome, so its node already exists.
        let link = if len == 1 {
            EVEN_ROOT
        } else {
            match self.find_extendable(self.nodes[q as usize].link, c, pos) {
                Some(r) => self.child(r, c).expect("proper suffix node exists"),
                None => EVEN_ROOT,
            }
        };
        let id = self.nodes.len() as u32;
        self.nodes.push(Node {
            len,
            link,
            first_edge: NIL,
            next_sibling: self.nodes[q as usize].first_edge,
            letter: c,
        });
        self.nodes[q as usize].first_edge = id;
        self.last = id;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{Alphabet, Word};

    fn lengths(v: &Antimorphism, s: &str) -> Vec<usize> {
        let w = Word::parse(v.alphabet(), s).unwrap();
        let mut tree = VPalTree::new(v);
        w.letters()
            .iter()
            .map(|&l| {
                tree.push(l);
                tree.longest_suffix_len()
            })
            .collect()
    }

    #[test]
    fn classical_reversal() {
        let r = Antimorphism::reversal(&Alphabet::parse("ab").unwrap());
        assert_eq!(lengths(&r, "aaba"), vec![1, 2, 1, 3]);
    }

    #[test]
    fn exchange_has_no_odd_palindromes() {
        let e = Antimorphism::exchange();
        assert_eq!(lengths(&e, "aaba"), vec![0, 0, 2, 2]);
        assert_eq!(lengths(&e, "abab"), vec![0, 2, 2, 4]);
    }

    #[test]
    fn hybrid_mixes_both() {
        let h = Antimorphism::hybrid();
        assert_eq!(lengths(&h, "abcacb"), vec![1, 0, 2, 4, 0, 2]);
    }

    #[test]
    fn distinct_count_matches_enumeration() {
        for v in [
            Antimorphism::reversal(&Alphabet::parse("ab").unwrap()),
            Antimorphism::exchange(),
        ] {
            let w = Word::parse(v.alphabet(), "abaababbaabbabaab").unwrap();
            let mut tree = VPalTree::new(&v);
            w.letters().iter().for_each(|&l| tree.push(l));
            let l = w.letters();
            let mut seen = std::collections::HashSet::new();
            for i in 0..l.len() {
                for j in i + 1..=l.len() {
                    if v.is_v_palindrome_slice(&l[i..j]) {
                        seen.insert(&l[i..j]);
                    }
                }
            }
            assert_eq!(tree.distinct_count(), seen.len());
            assert!(tree.distinct_count() <= w.len());
        }
    }
}
