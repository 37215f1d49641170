//! Textual names for semigroups such as `Z6`, `D3`, `Z2xA4` or `Z3xR2`, and
//! generator lists over them.
//!
//! A spec is a product of factors joined by `x`. Factors are `Zn` (cyclic),
//! `Dn` (dihedral), `Sn`, `An` (symmetric, alternating), `Rn` (right zero)
//! and `Ln` (left zero). Elements of a product are indexed in mixed radix,
//! first factor most significant.
//!
//! Generators are separated by commas or whitespace. A generator is an
//! element index or name of the whole table, or a tuple `(a,b,...)` with one
//! component per factor; a component may be `*`, standing for every element
//! of that factor. So `(1,*)` over `Z2xR3` is `{1} x R3`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{
    direct_product, make_alternating, make_cyclic, make_dihedral, make_left_zero, make_right_zero,
    make_symmetric, GeneratingSet, MulTable,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Factor {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    RightZero(usize),
    LeftZero(usize),
}

impl Factor {
    pub fn table(self) -> Result<MulTable> {
        match self {
            Factor::Cyclic(n) => make_cyclic(n),
            Factor::Dihedral(n) => make_dihedral(n),
            Factor::Symmetric(n) => make_symmetric(n),
            Factor::Alternating(n) => make_alternating(n),
            Factor::RightZero(n) => make_right_zero(n),
            Factor::LeftZero(n) => make_left_zero(n),
        }
    }

    pub fn is_group(self) -> bool {
        !matches!(self, Factor::RightZero(n) | Factor::LeftZero(n) if n > 1)
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, n) = match *self {
            Factor::Cyclic(n) => ('Z', n),
            Factor::Dihedral(n) => ('D', n),
            Factor::Symmetric(n) => ('S', n),
            Factor::Alternating(n) => ('A', n),
            Factor::RightZero(n) => ('R', n),
            Factor::LeftZero(n) => ('L', n),
        };
        write!(f, "{c}{n}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GroupSpec {
    factors: Vec<Factor>,
}

impl GroupSpec {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Parse("empty group spec".into()));
        }
        Ok(GroupSpec { factors })
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn table(&self) -> Result<MulTable> {
        let mut acc = self.factors[0].table()?;
        for f in &self.factors[1..] {
            acc = direct_product(&acc, &f.table()?);
        }
        Ok(acc)
    }

    /// Splits a trailing right-zero factor off: `Z3xR2` gives `(Z3, 2)`,
    /// and a spec without one gives `r = 1`.
    pub fn split_right_zero(&self) -> (Option<GroupSpec>, usize) {
        match self.factors.split_last() {
            Some((Factor::RightZero(r), rest)) if !rest.is_empty() => {
                (Some(GroupSpec { factors: rest.to_vec() }), *r)
            }
            Some((Factor::RightZero(r), _)) => (None, *r),
            _ => (Some(self.clone()), 1),
        }
    }

    pub fn with_right_zero(&self, r: usize) -> GroupSpec {
        let mut factors = self.factors.clone();
        factors.push(Factor::RightZero(r));
        GroupSpec { factors }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let factors = s
            .trim()
            .split(['x', 'X', '*'])
            .map(parse_factor)
            .collect::<Result<Vec<_>>>()?;
        GroupSpec::new(factors)
    }
}

fn parse_factor(s: &str) -> Result<Factor> {
    let s = s.trim();
    let mut chars = s.chars();
    let kind = chars.next().ok_or_else(|| Error::Parse("empty factor".into()))?;
    let n: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("bad factor `{s}`")))?;
    if n == 0 {
        return Err(Error::Parse(format!("factor `{s}` has order 0")));
    }
    Ok(match kind.to_ascii_uppercase() {
        'Z' | 'C' => Factor::Cyclic(n),
        'D' => Factor::Dihedral(n),
        'S' => Factor::Symmetric(n),
        'A' => Factor::Alternating(n),
        'R' => Factor::RightZero(n),
        'L' => Factor::LeftZero(n),
        _ => return Err(Error::Parse(format!("unknown factor kind in `{s}`"))),
    })
}

/// Parses a generator list against `spec`; see the module docs for syntax.
pub fn parse_generators(spec: &GroupSpec, table: &MulTable, text: &str) -> Result<GeneratingSet> {
    let factor_tables = spec
        .factors
        .iter()
        .map(|f| f.table())
        .collect::<Result<Vec<_>>>()?;
    let mut elements = Vec::new();
    for token in split_top_level(text)? {
        if let Some(inner) = token.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            if table.find(&token).is_some() && factor_tables.len() == 1 {
                elements.push(table.find(&token).unwrap());
                continue;
            }
            let parts = split_top_level(inner)?;
            if parts.len() != factor_tables.len() {
                return Err(Error::Parse(format!(
                    "generator `{token}` has {} components, spec {spec} has {} factors",
                    parts.len(),
                    factor_tables.len()
                )));
            }
            let choices = parts
                .iter()
                .zip(&factor_tables)
                .map(|(p, t)| component(p, t))
                .collect::<Result<Vec<_>>>()?;
            expand(&choices, &factor_tables, 0, 0, &mut elements);
        } else {
            elements.push(element(&token, table)?);
        }
    }
    if elements.is_empty() {
        return Err(Error::Parse("no generators given".into()));
    }
    GeneratingSet::new(table, elements)
}

fn expand(choices: &[Vec<usize>], tables: &[MulTable], k: usize, acc: usize, out: &mut Vec<usize>) {
    if k == choices.len() {
        out.push(acc);
        return;
    }
    for &c in &choices[k] {
        expand(choices, tables, k + 1, acc * tables[k].order() + c, out);
    }
}

fn component(p: &str, t: &MulTable) -> Result<Vec<usize>> {
    if p == "*" {
        Ok((0..t.order()).collect())
    } else {
        Ok(vec![element(p, t)?])
    }
}

fn element(token: &str, t: &MulTable) -> Result<usize> {
    if let Some(x) = t.find(token) {
        return Ok(x);
    }
    let x: usize = token
        .parse()
        .map_err(|_| Error::Parse(format!("unknown element `{token}`")))?;
    t.check_element(x)?;
    Ok(x)
}

// Splits on commas, semicolons and whitespace that are not inside parentheses.
fn split_top_level(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in `{text}`")))?;
                cur.push(ch);
            }
            ',' | ';' | ' ' | '\t' if depth == 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c if c.is_whitespace() => {}
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in `{text}`")));
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::cayley_graph;
    use crate::graph::named;
    use crate::iso::find_isomorphism;

    fn gens(spec: &str, text: &str) -> Result<(MulTable, GeneratingSet)> {
        let spec: GroupSpec = spec.parse()?;
        let t = spec.table()?;
        let c = parse_generators(&spec, &t, text)?;
        Ok((t, c))
    }

    #[test]
    fn parses_and_prints_specs() {
        for s in ["Z6", "D3", "Z2xD3xR2", "A4", "S4xL2"] {
            assert_eq!(s.parse::<GroupSpec>().unwrap().to_string(), s);
        }
        assert!("Q8".parse::<GroupSpec>().is_err());
        assert!("Z0".parse::<GroupSpec>().is_err());
        assert!("".parse::<GroupSpec>().is_err());
        assert_eq!("Z2xD3".parse::<GroupSpec>().unwrap().table().unwrap().order(), 12);
    }

    #[test]
    fn right_zero_split() {
        let s: GroupSpec = "Z3xR2".parse().unwrap();
        assert_eq!(s.split_right_zero(), (Some("Z3".parse().unwrap()), 2));
        let t: GroupSpec = "D4".parse().unwrap();
        assert_eq!(t.split_right_zero().1, 1);
        assert_eq!(t.with_right_zero(3).to_string(), "D4xR3");
        assert_eq!("R3".parse::<GroupSpec>().unwrap().split_right_zero(), (None, 3));
    }

    #[test]
    fn cyclic_generators() {
        let (t, c) = gens("Z6", "1").unwrap();
        assert_eq!(cayley_graph(&t, &c), named::cycle(6));
        let (_, c) = gens("Z6", "2,3").unwrap();
        assert_eq!(c.to_vec(), vec![2, 3]);
        assert!(matches!(gens("Z6", "7"), Err(Error::ElementOutOfRange { .. })));
        assert!(matches!(gens("Z6", "x"), Err(Error::Parse(_))));
        assert!(gens("Z6", "").is_err());
    }

    #[test]
    fn wildcard_tuples() {
        let (t, c) = gens("Z2xR3", "(1,*)").unwrap();
        assert_eq!(c.to_vec(), vec![3, 4, 5]);
        let g = cayley_graph(&t, &c);
        assert!(find_isomorphism(&g, &named::complete_bipartite(3, 3)).unwrap().is_some());
        assert!(gens("Z2xR3", "(1)").is_err());
        assert!(gens("Z2xR3", "(1,*").is_err());
    }

    #[test]
    fn element_names_accepted() {
        let (t, c) = gens("D3", "(0,1) (1,1)").unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.elements().all(|x| t.element_order(x).unwrap() == 2));
        let (_, c) = gens("R3", "r2").unwrap();
        assert_eq!(c.to_vec(), vec![1]);
    }
}
