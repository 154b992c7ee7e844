//! Braid words and their closures.
//!
//! A braid on `k` strands is a sequence of signed letters: letter `i > 0` is
//! the positive crossing of the strands at positions `i, i+1`, letter `-i`
//! its inverse. The closure joins top position `j` to bottom position `j`;
//! link components are the cycles of the induced permutation, numbered by
//! their smallest strand index.

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, Error> {
        if strands == 0 {
            return Err(Error::invalid("braid needs at least one strand"));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::invalid(format!(
                    "braid letter {l} out of range for {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parses the text form `braid k: w1 w2 ...`, e.g. `braid 2: 1 1 1`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let rest = text
            .trim()
            .strip_prefix("braid")
            .ok_or_else(|| Error::parse("braid word must start with 'braid'"))?;
        let (head, tail) = rest
            .split_once(':')
            .ok_or_else(|| Error::parse("missing ':' in braid word"))?;
        let strands: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad strand count '{}'", head.trim())))?;
        let mut letters = Vec::new();
        for tok in tail.split_whitespace() {
            let l: i32 = tok
                .parse()
                .map_err(|_| Error::parse(format!("bad braid letter '{tok}'")))?;
            letters.push(l);
        }
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// The permutation of strand positions induced by the word: entry `j` is
    /// the top position of the strand entering at bottom position `j`.
    pub fn permutation(&self) -> Vec<usize> {
        // position -> bottom strand occupying it, updated left to right
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = (l.unsigned_abs() as usize) - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }
}

/// A braid closure together with its component partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDiagram {
    braid: BraidWord,
    /// Strand indices of each component, each cycle sorted; components
    /// ordered by smallest strand index.
    components: Vec<Vec<usize>>,
}

impl LinkDiagram {
    pub fn close(braid: BraidWord) -> Self {
        let perm = braid.permutation();
        let n = braid.strands();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur);
                cur = perm[cur];
            }
            cycle.sort_unstable();
            components.push(cycle);
        }
        LinkDiagram { braid, components }
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Component index of a bottom strand position.
    pub fn component_of_strand(&self, strand: usize) -> usize {
        self.components
            .iter()
            .position(|c| c.contains(&strand))
            .expect("strand in some component")
    }

    /// Linking number of two distinct components: half the signed count of
    /// crossings between their strands.
    pub fn linking_number(&self, a: usize, b: usize) -> i64 {
        assert_ne!(a, b, "linking number needs distinct components");
        let mut at: Vec<usize> = (0..self.braid.strands()).collect();
        let mut twice = 0i64;
        for &l in self.braid.letters() {
            let i = (l.unsigned_abs() as usize) - 1;
            let (c1, c2) = (
                self.component_of_strand(at[i]),
                self.component_of_strand(at[i + 1]),
            );
            if (c1 == a && c2 == b) || (c1 == b && c2 == a) {
                twice += l.signum() as i64;
            }
            at.swap(i, i + 1);
        }
        debug_assert_eq!(twice % 2, 0, "inter-component crossings pair up");
        twice / 2
    }

    /// Removes all components outside `keep` by deleting their strands from
    /// the braid word and reindexing the remaining letters. `keep` holds
    /// component indices of `self`; the result's components correspond to
    /// the kept ones in increasing order.
    pub fn delete_components(&self, keep: &[usize]) -> Result<LinkDiagram, Error> {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() {
            return Err(Error::EmptyKeep);
        }
        if keep.iter().any(|&c| c >= self.num_components()) {
            return Err(Error::invalid("component index out of range"));
        }
        if keep.len() == self.num_components() {
            return Ok(self.clone());
        }
        let kept_strand: Vec<bool> = (0..self.braid.strands())
            .map(|s| keep.contains(&self.component_of_strand(s)))
            .collect();

        let mut at: Vec<usize> = (0..self.braid.strands()).collect();
        let mut letters = Vec::new();
        for &l in self.braid.letters() {
            let i = (l.unsigned_abs() as usize) - 1;
            let (s1, s2) = (at[i], at[i + 1]);
            if kept_strand[s1] && kept_strand[s2] {
                // position among the kept strands below position i
                let new_pos = at[..i].iter().filter(|&&s| kept_strand[s]).count();
                let mag = (new_pos + 1) as i32;
                letters.push(if l > 0 { mag } else { -mag });
            }
            at.swap(i, i + 1);
        }
        let new_strands = kept_strand.iter().filter(|&&k| k).count();
        Ok(LinkDiagram::close(BraidWord::new(new_strands, letters)?))
    }
}
