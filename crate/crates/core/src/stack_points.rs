//! Frobenius-fixed points of a finite quotient `[Z/H]` as a groupoid, split
//! into strata over the F-conjugacy classes of `H`.
//!
//! Conventions: `H` acts on the right, F-conjugacy is `h ~ g h F(g)⁻¹`, and
//! the stratum of `h` is `Z^{F∘h} = {z : F(z) = z·h}` acted on by
//! `H^{F∘h} = {g : F(g) = h⁻¹ g h}`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::group_data::FiniteGroupWithAutomorphism;

/// A right action of `H` on a finite set `Z` with a compatible Frobenius
/// `F_Z(z·h) = F_Z(z)·F(h)`.
#[derive(Clone, Debug)]
pub struct FiniteActionWithFrobenius {
    group: FiniteGroupWithAutomorphism,
    name: String,
    /// `action[z][h] = z·h`
    action: Vec<Vec<usize>>,
    frob: Vec<usize>,
}

impl FiniteActionWithFrobenius {
    /// Validates the action axioms, bijectivity of `frob`, and compatibility.
    pub fn new(
        group: FiniteGroupWithAutomorphism,
        name: impl Into<String>,
        action: Vec<Vec<usize>>,
        frob: Vec<usize>,
    ) -> Result<Self> {
        let grp = group.group();
        let (size, order) = (action.len(), grp.order());
        if size == 0 {
            return Err(Error::InvalidAction("empty set".into()));
        }
        if action.iter().any(|row| row.len() != order) {
            return Err(Error::InvalidAction(format!("each row needs {order} entries")));
        }
        if action.iter().flatten().any(|&z| z >= size) {
            return Err(Error::InvalidAction("action entry out of range".into()));
        }
        if frob.len() != size || frob.iter().any(|&z| z >= size) {
            return Err(Error::InvalidAction(format!("frobenius needs {size} entries in range")));
        }
        let mut seen = vec![false; size];
        for &z in &frob {
            if std::mem::replace(&mut seen[z], true) {
                return Err(Error::InvalidAction("frobenius is not a bijection".into()));
            }
        }
        for z in 0..size {
            if action[z][grp.identity()] != z {
                return Err(Error::InvalidAction(format!("{z}·e != {z}")));
            }
            for g in 0..order {
                for h in 0..order {
                    if action[action[z][g]][h] != action[z][grp.mul(g, h)] {
                        return Err(Error::InvalidAction(format!("({z}·{g})·{h} != {z}·({g}{h})")));
                    }
                }
                if frob[action[z][g]] != action[frob[z]][group.apply(g)] {
                    return Err(Error::InvalidAction(format!("F({z}·{g}) != F({z})·F({g})")));
                }
            }
        }
        Ok(Self { group, name: name.into(), action, frob })
    }

    /// One point, trivial action.
    pub fn point(group: FiniteGroupWithAutomorphism) -> Self {
        let order = group.group().order();
        Self::new(group, "point", vec![vec![0; order]], vec![0]).expect("the point is a valid action")
    }

    /// `Z = H`, `z·h = zh`, `F_Z = F`.
    pub fn self_translation(group: FiniteGroupWithAutomorphism) -> Self {
        let grp = group.group();
        let n = grp.order();
        let action = (0..n).map(|z| (0..n).map(|h| grp.mul(z, h)).collect()).collect();
        let frob = group.images().to_vec();
        Self::new(group, "self-translation", action, frob).expect("right translation is a valid action")
    }

    /// `Z = H`, `z·h = h⁻¹ z h`, `F_Z = F`.
    pub fn self_conjugation(group: FiniteGroupWithAutomorphism) -> Self {
        let grp = group.group();
        let n = grp.order();
        let action = (0..n).map(|z| (0..n).map(|h| grp.conjugate(z, h)).collect()).collect();
        let frob = group.images().to_vec();
        Self::new(group, "self-conjugation", action, frob).expect("conjugation is a valid action")
    }

    /// Parses the table format: a line `Z <size>`, then `size` lines of
    /// `|H|` indices giving `z·h`, then one line of `size` indices giving
    /// `F_Z`. Blank lines and `#` comments are ignored.
    pub fn from_table_text(group: FiniteGroupWithAutomorphism, text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty action file".into()))?;
        let size = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["Z", n] => n.parse::<usize>().map_err(|_| Error::Parse(format!("bad size in `{header}`")))?,
            _ => return Err(Error::Parse(format!("expected `Z <size>`, found `{header}`"))),
        };
        let parse_row = |line: &str| {
            line.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad index `{t}`"))))
                .collect::<Result<Vec<_>>>()
        };
        let action = (0..size)
            .map(|z| {
                let line = lines.next().ok_or_else(|| Error::Parse(format!("missing action row {z}")))?;
                parse_row(line)
            })
            .collect::<Result<Vec<_>>>()?;
        let frob = parse_row(lines.next().ok_or_else(|| Error::Parse("missing frobenius row".into()))?)?;
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected trailing line `{extra}`")));
        }
        Self::new(group, "table", action, frob)
    }

    pub fn group(&self) -> &FiniteGroupWithAutomorphism {
        &self.group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_size(&self) -> usize {
        self.action.len()
    }

    /// `z·h`.
    pub fn act(&self, z: usize, h: usize) -> usize {
        self.action[z][h]
    }

    pub fn frob(&self, z: usize) -> usize {
        self.frob[z]
    }

    /// `Z^{F∘h} = {z : F_Z(z) = z·h}`.
    pub fn twisted_fixed_points(&self, h: usize) -> Result<Vec<usize>> {
        self.group.group().check_element(h)?;
        Ok((0..self.set_size()).filter(|&z| self.frob(z) == self.act(z, h)).collect())
    }

    /// One stratum per F-conjugacy class, in class order.
    pub fn decompose(&self) -> Result<StackPointDecomposition> {
        let classes = self.group.f_conjugacy_classes();
        let strata = classes
            .representatives()
            .into_iter()
            .zip(classes.classes())
            .map(|(h, class)| {
                let fixed = self.twisted_fixed_points(h)?;
                let centralizer = self.group.twisted_centralizer(h)?;
                let orbits = self.orbits(&fixed, &centralizer, h)?;
                Ok(Stratum { representative: h, class_size: class.len(), fixed, centralizer, orbits })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(StackPointDecomposition { group_order: self.group.group().order(), strata })
    }

    /// Orbits of `centralizer` on `fixed` by union-find.
    fn orbits(&self, fixed: &[usize], centralizer: &[usize], h: usize) -> Result<Vec<Vec<usize>>> {
        let mut slot = vec![usize::MAX; self.set_size()];
        for (i, &z) in fixed.iter().enumerate() {
            slot[z] = i;
        }
        let mut parent: Vec<usize> = (0..fixed.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, &z) in fixed.iter().enumerate() {
            for &g in centralizer {
                let j = slot[self.act(z, g)];
                if j == usize::MAX {
                    return Err(Error::UnstableStratum { representative: h });
                }
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); fixed.len()];
        for (i, &z) in fixed.iter().enumerate() {
            let root = find(&mut parent, i);
            groups[root].push(z);
        }
        Ok(groups.into_iter().filter(|o| !o.is_empty()).collect())
    }

    /// `(1/|H|) Σ_{h∈H} |Z^{F∘h}|`.
    pub fn element_averaged_mass(&self) -> BigRational {
        let order = self.group.group().order();
        let total: usize = (0..order)
            .map(|h| (0..self.set_size()).filter(|&z| self.frob(z) == self.act(z, h)).count())
            .sum();
        BigRational::new(BigInt::from(total), BigInt::from(order))
    }
}

/// `[Z^{F∘h} / H^{F∘h}]` for one class representative `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub representative: usize,
    pub class_size: usize,
    pub fixed: Vec<usize>,
    pub centralizer: Vec<usize>,
    /// Each orbit sorted, orbits ordered by least element.
    pub orbits: Vec<Vec<usize>>,
}

impl Stratum {
    /// `|Z^{F∘h}| / |H^{F∘h}|`.
    pub fn mass(&self) -> BigRational {
        BigRational::new(BigInt::from(self.fixed.len()), BigInt::from(self.centralizer.len()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackPointDecomposition {
    group_order: usize,
    strata: Vec<Stratum>,
}

impl StackPointDecomposition {
    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    /// `Σ_strata |Z^{F∘h}| / |H^{F∘h}|`.
    pub fn groupoid_mass(&self) -> BigRational {
        self.strata.iter().map(Stratum::mass).sum()
    }

    /// Basis of the function space: one `(stratum representative, orbit
    /// representative)` per orbit.
    pub fn function_space(&self) -> Vec<(usize, usize)> {
        self.strata
            .iter()
            .flat_map(|s| s.orbits.iter().map(move |o| (s.representative, o[0])))
            .collect()
    }

    /// Class sizes add up to `|H|`.
    pub fn class_equation_holds(&self) -> bool {
        self.strata.iter().map(|s| s.class_size).sum::<usize>() == self.group_order
            && self.strata.iter().all(|s| s.class_size * s.centralizer.len() == self.group_order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_data::FiniteGroup;
    use num_traits::One;

    fn plain(g: FiniteGroup) -> FiniteGroupWithAutomorphism {
        FiniteGroupWithAutomorphism::identity(g)
    }

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn point_over_s2() {
        let a = FiniteActionWithFrobenius::point(plain(FiniteGroup::symmetric(2).unwrap()));
        let d = a.decompose().unwrap();
        assert_eq!(d.strata().len(), 2);
        assert_eq!(d.groupoid_mass(), BigRational::one());
        assert_eq!(d.function_space().len(), 2);
    }

    #[test]
    fn point_over_z3_with_inversion() {
        let g = FiniteGroupWithAutomorphism::inversion(FiniteGroup::cyclic(3).unwrap()).unwrap();
        let a = FiniteActionWithFrobenius::point(g);
        let d = a.decompose().unwrap();
        assert_eq!(d.strata().len(), 1);
        assert_eq!(d.strata()[0].centralizer.len(), 1);
        assert_eq!(d.groupoid_mass(), BigRational::one());
    }

    #[test]
    fn function_space_of_point_over_symmetric_group() {
        for (n, p) in [(1, 1), (2, 2), (3, 3), (4, 5), (5, 7)] {
            let a = FiniteActionWithFrobenius::point(plain(FiniteGroup::symmetric(n).unwrap()));
            assert_eq!(a.decompose().unwrap().function_space().len(), p);
        }
    }

    #[test]
    fn translation_torsor_has_mass_one() {
        let a = FiniteActionWithFrobenius::self_translation(plain(FiniteGroup::dihedral(3).unwrap()));
        let d = a.decompose().unwrap();
        assert_eq!(d.groupoid_mass(), BigRational::one());
        assert_eq!(d.function_space().len(), 1);
    }

    #[test]
    fn conjugation_fixed_points() {
        let a = FiniteActionWithFrobenius::self_conjugation(plain(FiniteGroup::symmetric(3).unwrap()));
        assert_eq!(a.twisted_fixed_points(0).unwrap().len(), 6);
        let d = a.decompose().unwrap();
        assert_eq!(d.strata().len(), 3);
        // commuting pairs in S_3: 18, so mass 18/6
        assert_eq!(d.groupoid_mass(), rat(3, 1));
        assert_eq!(d.groupoid_mass(), a.element_averaged_mass());
        // Σ over classes of the number of classes of the centralizer: 3 + 2 + 3
        assert_eq!(d.function_space().len(), 8);
    }

    #[test]
    fn trivial_action_on_two_points() {
        let g = plain(FiniteGroup::cyclic(2).unwrap());
        let a = FiniteActionWithFrobenius::from_table_text(g, "Z 2\n0 0\n1 1\n0 1\n").unwrap();
        let d = a.decompose().unwrap();
        assert_eq!(d.strata().len(), 2);
        assert!(d.strata().iter().all(|s| s.fixed.len() == 2));
        assert_eq!(d.groupoid_mass(), rat(2, 1));
    }

    #[test]
    fn invalid_tables() {
        let g = plain(FiniteGroup::cyclic(2).unwrap());
        // not an action: 0·1 = 1 but 1·1 = 1
        assert!(FiniteActionWithFrobenius::from_table_text(g.clone(), "Z 2\n0 1\n1 1\n0 1").is_err());
        // frobenius incompatible with a swap action: F = swap is fine, F const is not
        assert!(FiniteActionWithFrobenius::from_table_text(g.clone(), "Z 2\n0 1\n1 0\n0 0").is_err());
        assert!(FiniteActionWithFrobenius::from_table_text(g.clone(), "Y 2\n0 1\n1 0\n0 1").is_err());
        assert!(FiniteActionWithFrobenius::from_table_text(g, "Z 2\n0 1\n1 0").is_err());
    }

    #[test]
    fn twisted_stratum_is_stable_for_outer_twists() {
        // every inner twist of S_3
        let s3 = FiniteGroup::symmetric(3).unwrap();
        for c in 0..6 {
            let g = FiniteGroupWithAutomorphism::conjugation(s3.clone(), c).unwrap();
            for a in [
                FiniteActionWithFrobenius::self_translation(g.clone()),
                FiniteActionWithFrobenius::self_conjugation(g.clone()),
            ] {
                let d = a.decompose().unwrap();
                assert!(d.class_equation_holds());
                assert_eq!(d.groupoid_mass(), a.element_averaged_mass());
            }
        }
    }
}
