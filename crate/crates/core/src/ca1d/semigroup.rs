use super::BlockMap;
use crate::error::{Error, Result};
use crate::symcore::Alphabet;

/// `⟨τ_1, …, τ_n⟩` truncated to words of length at most `closure_bound`.
#[derive(Debug, Clone)]
pub struct SemigroupPresentation {
    alphabet: Alphabet,
    generators: Vec<(String, BlockMap)>,
    closure_bound: usize,
}

impl SemigroupPresentation {
    pub fn new(generators: Vec<(String, BlockMap)>, closure_bound: usize) -> Result<Self> {
        let alphabet = generators.first().ok_or(Error::EmptyInput)?.1.alphabet();
        for (_, g) in &generators {
            alphabet.ensure_same(g.alphabet())?;
        }
        Ok(SemigroupPresentation { alphabet, generators, closure_bound })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn generators(&self) -> &[(String, BlockMap)] {
        &self.generators
    }

    pub fn closure_bound(&self) -> usize {
        self.closure_bound
    }

    /// Distinct transformations reachable by words of length `1..=closure_bound`,
    /// breadth first, each labelled by its first (shortest, then lex) word.
    /// Labels read left to right as composition, `"a.b"` meaning `a ∘ b`.
    pub fn elements(&self) -> Result<Vec<(String, BlockMap)>> {
        let mut found: Vec<(String, BlockMap)> = Vec::new();
        let mut frontier: Vec<(String, BlockMap)> = Vec::new();
        for (name, g) in &self.generators {
            let g = g.normalize();
            if !contains(&found, &g)? {
                found.push((name.clone(), g.clone()));
                frontier.push((name.clone(), g));
            }
        }
        for _ in 1..self.closure_bound {
            let mut next = Vec::new();
            for (word, m) in &frontier {
                for (name, g) in &self.generators {
                    let composed = g.compose(m)?.normalize();
                    if !contains(&found, &composed)? {
                        let label = format!("{name}.{word}");
                        found.push((label.clone(), composed.clone()));
                        next.push((label, composed));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Ok(found)
    }
}

fn contains(found: &[(String, BlockMap)], m: &BlockMap) -> Result<bool> {
    for (_, x) in found {
        if x.equal(m)? {
            return Ok(true);
        }
    }
    Ok(false)
}
