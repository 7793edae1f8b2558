//! Deterministic Schreier–Sims stabilizer chain.

use crate::perm::Perm;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    generators: Vec<Perm>,
    /// `transversal[b]` maps the base point to `b`, for `b` in the basic orbit.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Perm::identity(degree));
        Level {
            base,
            generators: Vec::new(),
            transversal,
            orbit: vec![base],
        }
    }

    /// Extends the basic orbit under the current generators.
    fn close_orbit(&mut self) {
        let mut k = 0;
        // Re-scan the whole orbit since a fresh generator can move old points.
        while k < self.orbit.len() {
            let b = self.orbit[k];
            for s in &self.generators {
                let c = s.apply(b);
                if self.transversal[c].is_none() {
                    let u = s.mul(self.transversal[b].as_ref().unwrap());
                    self.transversal[c] = Some(u);
                    self.orbit.push(c);
                }
            }
            k += 1;
        }
    }
}

/// Base and strong generating set for a permutation group.
#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn from_generators(degree: usize, generators: &[Perm]) -> Self {
        let mut chain = Self::new(degree);
        for g in generators {
            chain.add_generator(g);
        }
        chain
    }

    /// Adds a generator; returns whether the group grew.
    pub fn add_generator(&mut self, g: &Perm) -> bool {
        let (level, residue) = self.sift(g, 0);
        if residue.is_identity() {
            return false;
        }
        self.insert_strong(residue, 0, level);
        self.complete(level);
        true
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift(g, 0).1.is_identity()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Strips `g` through the chain from `start`; returns the level where
    /// sifting stopped and the residue.
    fn sift(&self, g: &Perm, start: usize) -> (usize, Perm) {
        let mut h = g.clone();
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let b = h.apply(level.base);
            match &level.transversal[b] {
                None => return (j, h),
                Some(u) => h = u.inverse().mul(&h),
            }
        }
        (self.levels.len(), h)
    }

    /// Adds `g` to the strong generators of levels `from..=to`. `g` must fix
    /// the base points of every level before `to`.
    fn insert_strong(&mut self, g: Perm, from: usize, to: usize) {
        if to == self.levels.len() {
            let base = g
                .first_moved_point()
                .expect("identity is never a strong generator");
            self.levels.push(Level::new(base, self.degree));
        }
        for level in &mut self.levels[from..=to] {
            level.generators.push(g.clone());
            level.close_orbit();
        }
    }

    /// First Schreier generator of `level` that does not sift through the
    /// levels below it, as `(stop level, residue)`.
    fn failing_schreier_generator(&self, level: usize) -> Option<(usize, Perm)> {
        let l = &self.levels[level];
        for &b in &l.orbit {
            let ub = l.transversal[b].as_ref().unwrap();
            for s in &l.generators {
                let usb = l.transversal[s.apply(b)].as_ref().unwrap();
                let schreier = usb.inverse().mul(&s.mul(ub));
                let (j, residue) = self.sift(&schreier, level + 1);
                if !residue.is_identity() {
                    return Some((j, residue));
                }
            }
        }
        None
    }

    /// Restores the Schreier property, assuming levels deeper than `start`
    /// are already complete.
    fn complete(&mut self, start: usize) {
        let mut level = start as isize;
        while level >= 0 {
            let i = level as usize;
            if i >= self.levels.len() {
                level -= 1;
                continue;
            }
            match self.failing_schreier_generator(i) {
                Some((j, residue)) => {
                    self.insert_strong(residue, i + 1, j);
                    level = j as isize;
                }
                None => level -= 1,
            }
        }
    }

    /// Every group element exactly once, as products of transversal elements.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &b in &level.orbit {
                let u = level.transversal[b].as_ref().unwrap();
                for h in &out {
                    next.push(u.mul(h));
                }
            }
            out = next;
        }
        out
    }
}
