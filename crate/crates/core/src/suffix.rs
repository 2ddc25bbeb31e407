//! Online generalized suffix tree over an integer alphabet.
//!
//! Words are appended to one text, each followed by a terminator symbol that
//! is unique to that word, and the text is extended with Ukkonen's algorithm.
//! A unique terminator empties the pending-suffix queue, so every word is
//! fully indexed when [`SuffixIndex::insert`] returns. Child edges live in a
//! single hash map keyed by `(node, first letter)`.

use rustc_hash::FxHashMap as HashMap;

use crate::error::{Error, Result};

const ROOT: usize = 0;

#[derive(Debug, Clone)]
struct Node {
    start: usize,
    /// `None` for leaves, whose edge runs to the current end of the text.
    end: Option<usize>,
    link: usize,
    /// Some child edge starts with a terminator.
    terminal: bool,
}

/// Dictionary of all suffixes of the inserted words.
///
/// Single writer: queries take `&self`, inserts take `&mut self`.
#[derive(Debug, Clone)]
pub struct SuffixIndex {
    alphabet: usize,
    text: Vec<u64>,
    nodes: Vec<Node>,
    children: HashMap<(usize, u64), usize>,
    words: usize,
    active_node: usize,
    active_edge: usize,
    active_len: usize,
    remainder: usize,
}

impl SuffixIndex {
    /// Empty index over letters `0..alphabet`.
    pub fn new(alphabet: usize) -> Self {
        SuffixIndex {
            alphabet,
            text: Vec::new(),
            nodes: vec![Node {
                start: 0,
                end: Some(0),
                link: ROOT,
                terminal: false,
            }],
            children: HashMap::default(),
            words: 0,
            active_node: ROOT,
            active_edge: 0,
            active_len: 0,
            remainder: 0,
        }
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    /// Number of words inserted so far.
    pub fn word_count(&self) -> usize {
        self.words
    }

    /// Number of tree nodes, including the root.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Adds `word` and all of its suffixes. The empty word is a no-op.
    pub fn insert(&mut self, word: &[usize]) -> Result<()> {
        if let Some(&letter) = word.iter().find(|&&c| c >= self.alphabet) {
            return Err(Error::LetterOutOfRange {
                letter,
                alphabet: self.alphabet,
            });
        }
        if word.is_empty() {
            return Ok(());
        }
        for &c in word {
            self.extend(c as u64);
        }
        let terminator = (self.alphabet + self.words) as u64;
        self.extend(terminator);
        debug_assert_eq!(self.remainder, 0);
        self.words += 1;
        Ok(())
    }

    /// True iff `word` is a (not necessarily proper) suffix of an inserted
    /// word. The empty word is never reported.
    pub fn is_suffix(&self, word: &[usize]) -> bool {
        if word.is_empty() || word.iter().any(|&c| c >= self.alphabet) {
            return false;
        }
        let mut node = ROOT;
        let mut i = 0;
        loop {
            let Some(&child) = self.children.get(&(node, word[i] as u64)) else {
                return false;
            };
            let start = self.nodes[child].start;
            let len = self.edge_len(child);
            let mut t = 0;
            while t < len && i < word.len() {
                if self.text[start + t] != word[i] as u64 {
                    return false;
                }
                t += 1;
                i += 1;
            }
            if i == word.len() {
                return if t < len {
                    self.is_terminator(self.text[start + t])
                } else {
                    self.nodes[child].terminal
                };
            }
            node = child;
        }
    }

    /// True iff some stored suffix begins with `letter`.
    pub fn has_root_letter(&self, letter: usize) -> bool {
        letter < self.alphabet && self.children.contains_key(&(ROOT, letter as u64))
    }

    fn is_terminator(&self, c: u64) -> bool {
        c >= self.alphabet as u64
    }

    fn edge_len(&self, node: usize) -> usize {
        let n = &self.nodes[node];
        n.end.unwrap_or(self.text.len()) - n.start
    }

    fn new_node(&mut self, start: usize, end: Option<usize>) -> usize {
        self.nodes.push(Node {
            start,
            end,
            link: ROOT,
            terminal: false,
        });
        self.nodes.len() - 1
    }

    fn set_child(&mut self, parent: usize, key: u64, child: usize) {
        self.children.insert((parent, key), child);
        if self.is_terminator(key) {
            self.nodes[parent].terminal = true;
        }
    }

    fn extend(&mut self, c: u64) {
        let pos = self.text.len();
        self.text.push(c);
        self.remainder += 1;
        let mut last_internal: Option<usize> = None;

        while self.remainder > 0 {
            if self.active_len == 0 {
                self.active_edge = pos;
            }
            let key = self.text[self.active_edge];
            match self.children.get(&(self.active_node, key)).copied() {
                None => {
                    let leaf = self.new_node(pos, None);
                    self.set_child(self.active_node, key, leaf);
                    if let Some(prev) = last_internal.take() {
                        self.nodes[prev].link = self.active_node;
                    }
                }
                Some(next) => {
                    let len = self.edge_len(next);
                    if self.active_len >= len {
                        self.active_edge += len;
                        self.active_len -= len;
                        self.active_node = next;
                        continue;
                    }
                    if self.text[self.nodes[next].start + self.active_len] == c {
                        if let Some(prev) = last_internal.take() {
                            if self.active_node != ROOT {
                                self.nodes[prev].link = self.active_node;
                            }
                        }
                        self.active_len += 1;
                        break;
                    }
                    let start = self.nodes[next].start;
                    let split = self.new_node(start, Some(start + self.active_len));
                    self.set_child(self.active_node, key, split);
                    let leaf = self.new_node(pos, None);
                    self.set_child(split, c, leaf);
                    self.nodes[next].start += self.active_len;
                    let rest = self.text[self.nodes[next].start];
                    self.set_child(split, rest, next);
                    if let Some(prev) = last_internal {
                        self.nodes[prev].link = split;
                    }
                    last_internal = Some(split);
                }
            }
            self.remainder -= 1;
            if self.active_node == ROOT && self.active_len > 0 {
                self.active_len -= 1;
                self.active_edge = pos + 1 - self.remainder;
            } else if self.active_node != ROOT {
                self.active_node = self.nodes[self.active_node].link;
            }
        }
    }
}
