use crate::word::Letter;

const NONE: u32 = u32::MAX;
/// Root of length -1 (imaginary palindrome).
const ODD_ROOT: u32 = 0;
/// Root of length 0 (the empty palindrome).
const EVEN_ROOT: u32 = 1;

#[derive(Clone, Debug)]
struct Node {
    len: i64,
    link: u32,
}

/// Palindromic tree (eertree) built letter by letter.
///
/// Each node is a distinct nonempty palindromic factor of the text read so
/// far; `push` adds at most one node, which is the new longest palindromic
/// suffix when it has not been seen before.
#[derive(Clone, Debug)]
pub struct PalindromicTree {
    k: usize,
    text: Vec<Letter>,
    nodes: Vec<Node>,
    edges: Vec<u32>,
    suffix: u32,
}

impl PalindromicTree {
    pub fn new(alphabet_size: usize) -> Self {
        let k = alphabet_size.max(1);
        PalindromicTree {
            k,
            text: Vec::new(),
            nodes: vec![Node { len: -1, link: ODD_ROOT }, Node { len: 0, link: ODD_ROOT }],
            edges: vec![NONE; 2 * k],
            suffix: EVEN_ROOT,
        }
    }

    fn edge(&self, node: u32, a: Letter) -> u32 {
        self.edges[node as usize * self.k + a as usize]
    }

    /// Walks suffix links from `node` until the palindrome can be wrapped in
    /// `a` at text position `i`.
    fn find(&self, mut node: u32, i: usize, a: Letter) -> u32 {
        loop {
            let len = self.nodes[node as usize].len;
            let j = i as i64 - len - 1;
            if j >= 0 && self.text[j as usize] == a {
                return node;
            }
            node = self.nodes[node as usize].link;
        }
    }

    /// Appends a letter; returns `true` when a new palindromic factor appeared.
    pub fn push(&mut self, a: Letter) -> bool {
        assert!((a as usize) < self.k, "letter {a} outside alphabet of size {}", self.k);
        let i = self.text.len();
        self.text.push(a);
        let parent = self.find(self.suffix, i, a);
        let existing = self.edge(parent, a);
        if existing != NONE {
            self.suffix = existing;
            return false;
        }
        let len = self.nodes[parent as usize].len + 2;
        let link = if len == 1 {
            EVEN_ROOT
        } else {
            let p = self.find(self.nodes[parent as usize].link, i, a);
            self.edge(p, a)
        };
        let id = self.nodes.len() as u32;
        self.nodes.push(Node { len, link });
        self.edges.extend(std::iter::repeat_n(NONE, self.k));
        self.edges[parent as usize * self.k + a as usize] = id;
        self.suffix = id;
        true
    }

    pub fn text_len(&self) -> usize {
        self.text.len()
    }

    /// Distinct palindromic factors read so far, the empty word included.
    pub fn distinct(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn defect(&self) -> usize {
        self.text.len() + 1 - self.distinct()
    }

    pub fn longest_suffix_len(&self) -> usize {
        self.nodes[self.suffix as usize].len.max(0) as usize
    }

    /// Distinct palindromes per length; index 0 is the empty word.
    pub fn per_length_counts(&self) -> Vec<usize> {
        let max = self.nodes.iter().map(|n| n.len).max().unwrap_or(0).max(0) as usize;
        let mut counts = vec![0; max + 1];
        for node in &self.nodes[1..] {
            counts[node.len as usize] += 1;
        }
        counts
    }
}
