//! Finite categories and groupoids given by composition tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result, Witness};

/// An arrow `γ: src → tgt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite category. The product `γγ′` is defined iff `src(γ) = tgt(γ′)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    pub objects: Vec<String>,
    pub arrows: Vec<Arrow>,
    compose: Vec<Vec<Option<usize>>>,
    /// The identity arrow of every object.
    pub units: Vec<usize>,
}

fn not_cat(msg: impl Into<String>, tuple: &[&str]) -> Error {
    Error::NotACategory(Witness::new(msg, tuple.iter().map(|s| s.to_string()).collect()))
}

impl FiniteCategory {
    /// Validates the data. `compose` lists `(γ, γ′, γγ′)` by arrow id; when it
    /// is omitted every composite must be the unique arrow with the right
    /// source and target.
    pub fn new(objects: Vec<String>, arrows: Vec<(String, String, String)>, compose: Option<Vec<(String, String, String)>>) -> Result<Self> {
        let mut obj_index = BTreeMap::new();
        for (i, o) in objects.iter().enumerate() {
            if obj_index.insert(o.clone(), i).is_some() {
                return Err(not_cat("duplicate object", &[o]));
            }
        }
        if objects.is_empty() {
            return Err(not_cat("a category needs at least one object", &[]));
        }
        let mut arrow_index = BTreeMap::new();
        let mut arr = Vec::with_capacity(arrows.len());
        for (id, src, tgt) in arrows {
            let s = *obj_index.get(&src).ok_or_else(|| not_cat("unknown source object", &[&id, &src]))?;
            let t = *obj_index.get(&tgt).ok_or_else(|| not_cat("unknown target object", &[&id, &tgt]))?;
            if arrow_index.insert(id.clone(), arr.len()).is_some() {
                return Err(not_cat("duplicate arrow", &[&id]));
            }
            arr.push(Arrow { id, src: s, tgt: t });
        }
        let m = arr.len();
        let mut table = vec![vec![None; m]; m];
        match compose {
            Some(entries) => {
                for (l, r, res) in entries {
                    let find = |x: &String| arrow_index.get(x).copied().ok_or_else(|| not_cat("unknown arrow in composition table", &[x]));
                    let (g, h, k) = (find(&l)?, find(&r)?, find(&res)?);
                    if arr[g].src != arr[h].tgt {
                        return Err(not_cat("composite of non-composable arrows listed", &[&l, &r]));
                    }
                    if arr[k].src != arr[h].src || arr[k].tgt != arr[g].tgt {
                        return Err(not_cat("composite has the wrong source or target", &[&l, &r, &res]));
                    }
                    if let Some(old) = table[g][h] {
                        if old != k {
                            return Err(not_cat("composite listed twice with different results", &[&l, &r]));
                        }
                    }
                    table[g][h] = Some(k);
                }
                for g in 0..m {
                    for h in 0..m {
                        if arr[g].src == arr[h].tgt && table[g][h].is_none() {
                            return Err(not_cat("composite missing from the table", &[&arr[g].id, &arr[h].id]));
                        }
                    }
                }
            }
            None => {
                for g in 0..m {
                    for h in 0..m {
                        if arr[g].src != arr[h].tgt {
                            continue;
                        }
                        let cands: Vec<usize> = (0..m).filter(|&k| arr[k].src == arr[h].src && arr[k].tgt == arr[g].tgt).collect();
                        if cands.len() != 1 {
                            return Err(not_cat("composite is not determined by source and target", &[&arr[g].id, &arr[h].id]));
                        }
                        table[g][h] = Some(cands[0]);
                    }
                }
            }
        }
        for f in 0..m {
            for g in 0..m {
                for h in 0..m {
                    if let (Some(fg), Some(gh)) = (table[f][g], table[g][h]) {
                        if table[fg][h] != table[f][gh] {
                            return Err(not_cat("composition is not associative", &[&arr[f].id, &arr[g].id, &arr[h].id]));
                        }
                    }
                }
            }
        }
        let mut units = Vec::with_capacity(objects.len());
        for (u, name) in objects.iter().enumerate() {
            let is_unit = |e: usize| {
                arr[e].src == u
                    && arr[e].tgt == u
                    && (0..m).all(|g| (arr[g].tgt != u || table[e][g] == Some(g)) && (arr[g].src != u || table[g][e] == Some(g)))
            };
            match (0..m).find(|&e| is_unit(e)) {
                Some(e) => units.push(e),
                None => return Err(not_cat("object has no identity arrow", &[name])),
            }
        }
        Ok(FiniteCategory { objects, arrows: arr, compose: table, units })
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn src(&self, g: usize) -> usize {
        self.arrows[g].src
    }

    pub fn tgt(&self, g: usize) -> usize {
        self.arrows[g].tgt
    }

    /// `gh` when `src(g) = tgt(h)`.
    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.compose[g][h]
    }

    pub fn is_unit(&self, g: usize) -> bool {
        self.units.contains(&g)
    }

    /// The object whose identity is `g`, if any.
    pub fn unit_object(&self, g: usize) -> Option<usize> {
        self.units.iter().position(|&e| e == g)
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    /// All pairs `(γ, γ′)` with `src(γ) = tgt(γ′)`.
    pub fn composable_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.num_arrows();
        let mut out = Vec::new();
        for g in 0..m {
            for h in 0..m {
                if self.compose[g][h].is_some() {
                    out.push((g, h));
                }
            }
        }
        out
    }

    /// The two-element monoid `{1, z}` with `zz = z` as a one-object
    /// category.
    pub fn absorbing_monoid() -> Self {
        let s = |x: &str| String::from(x);
        FiniteCategory::new(
            vec![s("*")],
            vec![(s("1"), s("*"), s("*")), (s("z"), s("*"), s("*"))],
            Some(vec![
                (s("1"), s("1"), s("1")),
                (s("1"), s("z"), s("z")),
                (s("z"), s("1"), s("z")),
                (s("z"), s("z"), s("z")),
            ]),
        )
        .expect("the absorbing monoid is a category")
    }
}

/// A finite groupoid: a finite category in which every arrow is invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupoid {
    cat: FiniteCategory,
    inverse: Vec<usize>,
}

impl FiniteGroupoid {
    /// Validates the inverses of a category. `inverse` lists `(γ, γ⁻¹)` by
    /// arrow id; when omitted the inverses are solved for.
    pub fn new(cat: FiniteCategory, inverse: Option<Vec<(String, String)>>) -> Result<Self> {
        let m = cat.num_arrows();
        let is_inverse = |g: usize, h: usize| {
            cat.compose(h, g) == Some(cat.units[cat.src(g)]) && cat.compose(g, h) == Some(cat.units[cat.tgt(g)])
        };
        let mut inv = vec![usize::MAX; m];
        if let Some(entries) = inverse {
            for (a, b) in entries {
                let g = cat.arrow_index(&a).ok_or_else(|| not_cat("unknown arrow in inverse table", &[&a]))?;
                let h = cat.arrow_index(&b).ok_or_else(|| not_cat("unknown arrow in inverse table", &[&b]))?;
                if !is_inverse(g, h) {
                    return Err(Error::NotAGroupoid(Witness::new("listed inverse is not an inverse", vec![a, b])));
                }
                inv[g] = h;
            }
        }
        for g in 0..m {
            if inv[g] == usize::MAX {
                match (0..m).find(|&h| is_inverse(g, h)) {
                    Some(h) => inv[g] = h,
                    None => {
                        return Err(Error::NotAGroupoid(Witness::new("arrow has no inverse", vec![cat.arrows[g].id.clone()])));
                    }
                }
            }
        }
        Ok(FiniteGroupoid { cat, inverse: inv })
    }

    /// Parses plain table data; see [`FiniteCategory::new`].
    pub fn from_tables(
        objects: Vec<String>,
        arrows: Vec<(String, String, String)>,
        compose: Option<Vec<(String, String, String)>>,
        inverse: Option<Vec<(String, String)>>,
    ) -> Result<Self> {
        FiniteGroupoid::new(FiniteCategory::new(objects, arrows, compose)?, inverse)
    }

    pub fn category(&self) -> &FiniteCategory {
        &self.cat
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// One object and its identity.
    pub fn one_point() -> Self {
        Self::cyclic(1)
    }

    /// `ℤ/n` as a one-object groupoid with arrows `g0, …, g(n-1)`.
    pub fn cyclic(n: usize) -> Self {
        let ids: Vec<String> = (0..n).map(|k| format!("g{}", k)).collect();
        let arrows = ids.iter().map(|g| (g.clone(), String::from("*"), String::from("*"))).collect();
        let mut table = Vec::new();
        for a in 0..n {
            for b in 0..n {
                table.push((ids[a].clone(), ids[b].clone(), ids[(a + b) % n].clone()));
            }
        }
        Self::from_tables(vec![String::from("*")], arrows, Some(table), None).expect("cyclic groups are groupoids")
    }

    /// The pair groupoid on objects `1, …, k`: one arrow `e_ij: j → i` for
    /// every pair, with `e_ij e_jk = e_ik`.
    pub fn pair(k: usize) -> Self {
        let objects: Vec<String> = (1..=k).map(|i| format!("{}", i)).collect();
        let mut arrows = Vec::new();
        for i in 1..=k {
            for j in 1..=k {
                arrows.push((format!("e{}{}", i, j), format!("{}", j), format!("{}", i)));
            }
        }
        Self::from_tables(objects, arrows, None, None).expect("pair groupoids are groupoids")
    }
}
