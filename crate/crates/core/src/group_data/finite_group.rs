//! Finite groups given by composition tables, automorphisms, and F-twisted
//! conjugacy.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A finite group stored as a full composition table.
///
/// Elements are the indices `0..order`; `mul(a, b)` is the product `ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from its table, checking closure, associativity,
    /// identity and inverses.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let labels = (0..table.len()).map(|i| i.to_string()).collect();
        Self::from_labelled_table(name, labels, table)
    }

    fn from_labelled_table(
        name: impl Into<String>,
        labels: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if table.iter().any(|row| row.len() != n) {
            return Err(Error::NotAGroup("table is not square".into()));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::NotAGroup("table entry out of range".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("({a}{b}){c} != {a}({b}{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        let inverses = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| table[g][h] == identity)
                    .ok_or_else(|| Error::NotAGroup(format!("{g} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            name: name.into(),
            labels,
            table,
            identity,
            inverses,
        })
    }

    /// `Z/n` under addition.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAGroup("cyclic:0".into()));
        }
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_labelled_table(format!("cyclic:{n}"), (0..n).map(|i| i.to_string()).collect(), table)
    }

    /// `S_n` acting on `{0..n-1}`; elements are permutations in one-line
    /// notation, listed lexicographically, and `(gh)(i) = g(h(i))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAGroup("symmetric:0".into()));
        }
        let perms = permutations(n);
        let index = |p: &[usize]| perms.binary_search_by(|x| x.as_slice().cmp(p)).unwrap();
        let table = perms
            .iter()
            .map(|g| {
                perms
                    .iter()
                    .map(|h| index(&h.iter().map(|&i| g[i]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let labels = perms
            .iter()
            .map(|p| format!("[{}]", p.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        Self::from_labelled_table(format!("symmetric:{n}"), labels, table)
    }

    /// The dihedral group of order `2n`; element `k + n·e` is `r^k s^e`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotAGroup("dihedral:0".into()));
        }
        let split = |x: usize| (x % n, x / n);
        let table = (0..2 * n)
            .map(|x| {
                (0..2 * n)
                    .map(|y| {
                        let ((a, e), (b, f)) = (split(x), split(y));
                        let b = if e == 0 { b } else { (n - b) % n };
                        (a + b) % n + n * ((e + f) % 2)
                    })
                    .collect()
            })
            .collect();
        let labels = (0..2 * n)
            .map(|x| {
                let (a, e) = split(x);
                if e == 0 { format!("r^{a}") } else { format!("r^{a}s") }
            })
            .collect();
        Self::from_labelled_table(format!("dihedral:{n}"), labels, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inverses[g]
    }

    /// `h⁻¹ g h`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), g), h)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn check_element(&self, g: usize) -> Result<()> {
        if g < self.order() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element: g, order: self.order() })
        }
    }

    /// Whether `subset` is closed under products and inverses and contains
    /// the identity.
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        set.contains(&self.identity)
            && set.iter().all(|&a| set.contains(&self.inv(a)))
            && set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// A finite group `H` with an automorphism `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupWithAutomorphism {
    group: FiniteGroup,
    frobenius: Vec<usize>,
    description: String,
}

impl FiniteGroupWithAutomorphism {
    /// Checks that `images` is a bijection respecting products.
    pub fn new(group: FiniteGroup, images: Vec<usize>, description: impl Into<String>) -> Result<Self> {
        let n = group.order();
        if images.len() != n {
            return Err(Error::NotAnAutomorphism(format!("{} images for a group of order {n}", images.len())));
        }
        let distinct: BTreeSet<usize> = images.iter().copied().collect();
        if distinct.len() != n || images.iter().any(|&x| x >= n) {
            return Err(Error::NotAnAutomorphism("not a bijection".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if images[group.mul(a, b)] != group.mul(images[a], images[b]) {
                    return Err(Error::NotAnAutomorphism(format!("F({a}·{b}) != F({a})·F({b})")));
                }
            }
        }
        Ok(Self { group, frobenius: images, description: description.into() })
    }

    pub fn identity(group: FiniteGroup) -> Self {
        let images = (0..group.order()).collect();
        Self { group, frobenius: images, description: "identity".into() }
    }

    /// `g ↦ g⁻¹`; an automorphism only for abelian groups.
    pub fn inversion(group: FiniteGroup) -> Result<Self> {
        if !group.is_abelian() {
            return Err(Error::NotAnAutomorphism(format!("inversion on non-abelian {}", group.name())));
        }
        let images = (0..group.order()).map(|g| group.inv(g)).collect();
        Self::new(group, images, "inversion")
    }

    /// `g ↦ c g c⁻¹`.
    pub fn conjugation(group: FiniteGroup, c: usize) -> Result<Self> {
        group.check_element(c)?;
        let images = (0..group.order()).map(|g| group.conjugate(g, group.inv(c))).collect();
        Self::new(group, images, format!("conjugation:{c}"))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// `F(g)`.
    pub fn apply(&self, g: usize) -> usize {
        self.frobenius[g]
    }

    pub fn images(&self) -> &[usize] {
        &self.frobenius
    }

    /// `g h F(g)⁻¹`.
    pub fn twisted_conjugate(&self, g: usize, h: usize) -> usize {
        let grp = &self.group;
        grp.mul(grp.mul(g, h), grp.inv(self.apply(g)))
    }

    /// Orbits of `h ↦ g h F(g)⁻¹`, each represented by its least element.
    pub fn f_conjugacy_classes(&self) -> FConjClassSet {
        let n = self.group.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for h in 0..n {
            if class_of[h] != usize::MAX {
                continue;
            }
            let orbit: BTreeSet<usize> = (0..n).map(|g| self.twisted_conjugate(g, h)).collect();
            for &x in &orbit {
                class_of[x] = classes.len();
            }
            classes.push(orbit.into_iter().collect::<Vec<_>>());
        }
        FConjClassSet { classes, class_of }
    }

    /// `H^{F∘h} = {g : F(g) = h⁻¹ g h}`, the stabilizer of `h` under
    /// F-twisted conjugation.
    pub fn twisted_centralizer(&self, h: usize) -> Result<Vec<usize>> {
        self.group.check_element(h)?;
        let members: Vec<usize> = (0..self.group.order())
            .filter(|&g| self.apply(g) == self.group.conjugate(g, h))
            .collect();
        if !self.group.is_subgroup(&members) {
            return Err(Error::Internal(format!("twisted centralizer of {h} is not a subgroup")));
        }
        Ok(members)
    }
}

/// The F-conjugacy classes of a group, ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FConjClassSet {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl FConjClassSet {
    /// Each class, sorted ascending.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    /// Index of the class containing `g`.
    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }
}

/// Parses `cyclic:n`, `symmetric:n` or `dihedral:n`.
pub fn parse_group(spec: &str) -> Result<FiniteGroup> {
    let (kind, arg) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("group spec `{spec}` is not kind:n")))?;
    let n: usize = arg
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad group size in `{spec}`")))?;
    match kind.trim() {
        "cyclic" => FiniteGroup::cyclic(n),
        "symmetric" if n > 5 => Err(Error::Parse(format!("symmetric:{n} is above the supported size 5"))),
        "symmetric" => FiniteGroup::symmetric(n),
        "dihedral" => FiniteGroup::dihedral(n),
        other => Err(Error::Parse(format!("unknown group kind `{other}`"))),
    }
}

/// Parses `identity`, `inversion`, `conjugation:<index>` or
/// `perm:<i0,i1,...>` (the list of images of `0, 1, ...`).
pub fn parse_automorphism(group: FiniteGroup, spec: &str) -> Result<FiniteGroupWithAutomorphism> {
    let spec = spec.trim();
    match spec.split_once(':') {
        None if spec == "identity" => Ok(FiniteGroupWithAutomorphism::identity(group)),
        None if spec == "inversion" => FiniteGroupWithAutomorphism::inversion(group),
        Some(("conjugation", idx)) => {
            let c = idx
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad element index in `{spec}`")))?;
            FiniteGroupWithAutomorphism::conjugation(group, c)
        }
        Some(("perm", list)) => {
            let images = list
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Parse(format!("bad permutation list in `{spec}`")))?;
            FiniteGroupWithAutomorphism::new(group, images, spec)
        }
        _ => Err(Error::Parse(format!("unknown automorphism `{spec}`"))),
    }
}
