//! Exhaustive lattice checks on small finite posets given by their order
//! relation. Nothing here knows about intervals.

/// A finite poset on `0..size` stored as a dense `<=` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    size: usize,
    le: Vec<bool>,
}

impl FinitePoset {
    /// `le(a, b)` must be a partial order; it is not re-verified.
    pub fn from_relation(size: usize, le: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = vec![false; size * size];
        for a in 0..size {
            for b in 0..size {
                m[a * size + b] = le(a, b);
            }
        }
        FinitePoset { size, le: m }
    }

    /// Order generated by `(lower, upper)` cover pairs.
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Self {
        let mut m = vec![false; size * size];
        for a in 0..size {
            m[a * size + a] = true;
        }
        for &(a, b) in covers {
            m[a * size + b] = true;
        }
        // Warshall closure
        for k in 0..size {
            for a in 0..size {
                if m[a * size + k] {
                    for b in 0..size {
                        if m[k * size + b] {
                            m[a * size + b] = true;
                        }
                    }
                }
            }
        }
        FinitePoset { size, le: m }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a * self.size + b]
    }

    /// Greatest lower bound by exhaustive search, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.size)
            .filter(|&x| self.le(x, a) && self.le(x, b))
            .collect();
        lower
            .iter()
            .copied()
            .find(|&g| lower.iter().all(|&x| self.le(x, g)))
    }

    /// Least upper bound by exhaustive search, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.size)
            .filter(|&x| self.le(a, x) && self.le(b, x))
            .collect();
        upper
            .iter()
            .copied()
            .find(|&l| upper.iter().all(|&x| self.le(l, x)))
    }

    /// Meet and join tables, or `None` when some pair lacks one.
    pub fn lattice_tables(&self) -> Option<LatticeTables> {
        let s = self.size;
        let mut meet = vec![0; s * s];
        let mut join = vec![0; s * s];
        for a in 0..s {
            for b in a..s {
                let m = self.meet(a, b)?;
                let j = self.join(a, b)?;
                meet[a * s + b] = m;
                meet[b * s + a] = m;
                join[a * s + b] = j;
                join[b * s + a] = j;
            }
        }
        Some(LatticeTables {
            size: s,
            le: self.le.clone(),
            meet,
            join,
        })
    }

    pub fn is_lattice(&self) -> bool {
        self.size > 0 && self.lattice_tables().is_some()
    }
}

/// Precomputed lattice operations.
#[derive(Clone, Debug)]
pub struct LatticeTables {
    size: usize,
    le: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
}

impl LatticeTables {
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b]
    }

    /// `a <= b` implies `a ∨ (x ∧ b) = (a ∨ x) ∧ b`, over all triples.
    pub fn is_modular(&self) -> bool {
        let s = self.size;
        for a in 0..s {
            for b in 0..s {
                if !self.le[a * s + b] {
                    continue;
                }
                for x in 0..s {
                    if self.join(a, self.meet(x, b)) != self.meet(self.join(a, x), b) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`, over all triples.
    pub fn is_distributive(&self) -> bool {
        let s = self.size;
        for a in 0..s {
            for b in 0..s {
                for c in b..s {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}
