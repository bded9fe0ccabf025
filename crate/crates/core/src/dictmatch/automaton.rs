use std::collections::{HashMap, VecDeque};

use crate::strings1d::NameId;

/// Aho-Corasick automaton over sequences of row names.
///
/// Text positions carry `Option<NameId>`; `None` marks a row that matches
/// no pattern row and sends the automaton back to the root.
#[derive(Debug, Clone)]
pub struct VerticalMatcher {
    goto: Vec<HashMap<NameId, usize>>,
    fail: Vec<usize>,
    /// Keywords ending at each state, including those reached by failure links.
    out: Vec<Vec<usize>>,
    lens: Vec<usize>,
}

impl VerticalMatcher {
    pub fn new(keywords: &[Vec<NameId>]) -> Self {
        let mut goto: Vec<HashMap<NameId, usize>> = vec![HashMap::new()];
        let mut out: Vec<Vec<usize>> = vec![Vec::new()];
        for (k, word) in keywords.iter().enumerate() {
            let mut state = 0;
            for name in word {
                state = match goto[state].get(name) {
                    Some(&next) => next,
                    None => {
                        goto.push(HashMap::new());
                        out.push(Vec::new());
                        let next = goto.len() - 1;
                        goto[state].insert(*name, next);
                        next
                    }
                };
            }
            out[state].push(k);
        }

        let mut fail = vec![0; goto.len()];
        let mut queue: VecDeque<usize> = goto[0].values().copied().collect();
        while let Some(state) = queue.pop_front() {
            let edges: Vec<(NameId, usize)> = goto[state].iter().map(|(&n, &s)| (n, s)).collect();
            for (name, next) in edges {
                let mut f = fail[state];
                let target = loop {
                    if let Some(&t) = goto[f].get(&name) {
                        break t;
                    }
                    if f == 0 {
                        break 0;
                    }
                    f = fail[f];
                };
                fail[next] = target;
                let inherited = out[target].clone();
                out[next].extend(inherited);
                queue.push_back(next);
            }
        }

        Self {
            goto,
            fail,
            out,
            lens: keywords.iter().map(Vec::len).collect(),
        }
    }

    fn step(&self, mut state: usize, name: NameId) -> usize {
        loop {
            if let Some(&next) = self.goto[state].get(&name) {
                return next;
            }
            if state == 0 {
                return 0;
            }
            state = self.fail[state];
        }
    }

    /// All `(keyword, start)` pairs where a keyword occurs in `seq`, in
    /// order of end position.
    pub fn find_all(&self, seq: &[Option<NameId>]) -> Vec<(usize, usize)> {
        let mut hits = Vec::new();
        let mut state = 0;
        for (end, item) in seq.iter().enumerate() {
            state = match item {
                Some(name) => self.step(state, *name),
                None => 0,
            };
            for &k in &self.out[state] {
                hits.push((k, end + 1 - self.lens[k]));
            }
        }
        hits
    }

    pub fn keyword_count(&self) -> usize {
        self.lens.len()
    }
}
