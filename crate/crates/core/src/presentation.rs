//! Normal-form group families described by their exponent bounds.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TGraphError};
use crate::Limits;

/// Exponent ranges `(e_1, ..., e_k)`: element `g_1^x_1 ... g_k^x_k` has
/// `0 <= x_i < e_i`. Serializes as a plain JSON array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct GeneratorBounds(Vec<u32>);

impl GeneratorBounds {
    /// Validates against the default element cap.
    pub fn new(bounds: Vec<u32>) -> Result<Self> {
        Self::with_cap(bounds, Limits::default().max_elements)
    }

    pub fn with_cap(bounds: Vec<u32>, max_elements: u64) -> Result<Self> {
        if bounds.is_empty() {
            return Err(TGraphError::InvalidParameter(
                "bounds need at least one generator".into(),
            ));
        }
        if let Some(bad) = bounds.iter().find(|&&e| e < 2) {
            return Err(TGraphError::InvalidParameter(format!(
                "every exponent bound must be at least 2, got {bad}"
            )));
        }
        let count = bounds
            .iter()
            .try_fold(1u128, |acc, &e| acc.checked_mul(u128::from(e)))
            .unwrap_or(u128::MAX);
        if count > u128::from(max_elements) || count > usize::MAX as u128 {
            return Err(TGraphError::size("element count", count, max_elements));
        }
        Ok(GeneratorBounds(bounds))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Number of generators `k`.
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn element_count(&self) -> usize {
        self.0.iter().map(|&e| e as usize).product()
    }

    /// Largest possible distance, `sum (e_i - 1)`.
    pub fn diameter(&self) -> u32 {
        self.0.iter().map(|&e| e - 1).sum()
    }

    /// Validates an exponent vector against these bounds.
    pub fn element(&self, exponents: Vec<u32>) -> Result<GroupElement> {
        if exponents.len() != self.0.len() {
            return Err(TGraphError::InvalidArgument(format!(
                "element has {} exponents, bounds have {}",
                exponents.len(),
                self.0.len()
            )));
        }
        if let Some((x, e)) = exponents.iter().zip(&self.0).find(|(x, e)| x >= e) {
            return Err(TGraphError::InvalidArgument(format!(
                "exponent {x} out of range 0..{e}"
            )));
        }
        Ok(GroupElement { exponents })
    }

    /// Element at position `index` in lexicographic order (first generator
    /// most significant).
    pub fn element_at(&self, index: usize) -> Result<GroupElement> {
        if index >= self.element_count() {
            return Err(TGraphError::InvalidArgument(format!(
                "index {index} out of range for {} elements",
                self.element_count()
            )));
        }
        let mut exponents = vec![0; self.0.len()];
        let mut rest = index;
        for (slot, &e) in exponents.iter_mut().zip(&self.0).rev() {
            *slot = (rest % e as usize) as u32;
            rest /= e as usize;
        }
        Ok(GroupElement { exponents })
    }

    pub fn index_of(&self, x: &GroupElement) -> Result<usize> {
        if x.exponents.len() != self.0.len() || x.exponents.iter().zip(&self.0).any(|(a, e)| a >= e)
        {
            return Err(TGraphError::InvalidArgument(format!(
                "{:?} is not an element of bounds {:?}",
                x.exponents, self.0
            )));
        }
        Ok(self.index_unchecked(&x.exponents))
    }

    pub(crate) fn index_unchecked(&self, exponents: &[u32]) -> usize {
        exponents
            .iter()
            .zip(&self.0)
            .fold(0usize, |acc, (&x, &e)| acc * e as usize + x as usize)
    }

    /// All elements in lexicographic order of exponent vectors.
    pub fn enumerate_elements(&self) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(self.element_count());
        let mut current = vec![0u32; self.0.len()];
        loop {
            out.push(GroupElement {
                exponents: current.clone(),
            });
            // odometer increment, last coordinate fastest
            let mut pos = self.0.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                current[pos] += 1;
                if current[pos] < self.0[pos] {
                    break;
                }
                current[pos] = 0;
            }
        }
    }
}

impl TryFrom<Vec<u32>> for GeneratorBounds {
    type Error = TGraphError;

    fn try_from(value: Vec<u32>) -> Result<Self> {
        GeneratorBounds::new(value)
    }
}

impl From<GeneratorBounds> for Vec<u32> {
    fn from(value: GeneratorBounds) -> Self {
        value.0
    }
}

impl fmt::Display for GeneratorBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Exponent vector of one element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    exponents: Vec<u32>,
}

impl GroupElement {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Normal-form word such as `a^1 b^3`; the identity is `1`.
    pub fn word(&self) -> String {
        let factors: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, x)| format!("{}^{x}", generator_name(i)))
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join(" ")
        }
    }
}

fn generator_name(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("g{}", i + 1)
    }
}

/// Group families with a fixed normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NamedGroup {
    Cyclic(u32),
    DirectProductOfCyclics(Vec<u32>),
    /// `D_n`, written `a^i b^j` with `a^2 = b^n = 1`.
    Dihedral(u32),
    Quaternion8,
    Symmetric5,
}

impl NamedGroup {
    pub fn bounds(&self) -> Result<GeneratorBounds> {
        self.bounds_with_cap(Limits::default().max_elements)
    }

    pub fn bounds_with_cap(&self, max_elements: u64) -> Result<GeneratorBounds> {
        let raw = match self {
            NamedGroup::Cyclic(m) => {
                check_param("cyclic order", *m)?;
                vec![*m]
            }
            NamedGroup::DirectProductOfCyclics(factors) => {
                if factors.is_empty() {
                    return Err(TGraphError::InvalidParameter(
                        "direct product needs at least one factor".into(),
                    ));
                }
                for &f in factors {
                    check_param("cyclic factor", f)?;
                }
                factors.clone()
            }
            NamedGroup::Dihedral(n) => {
                check_param("dihedral n", *n)?;
                vec![2, *n]
            }
            // a^i b^j with i < 2, j < 4, same listing as D_4
            NamedGroup::Quaternion8 => vec![2, 4],
            NamedGroup::Symmetric5 => vec![2, 3, 4, 5],
        };
        GeneratorBounds::with_cap(raw, max_elements)
    }
}

fn check_param(what: &str, value: u32) -> Result<()> {
    if value < 2 {
        return Err(TGraphError::InvalidParameter(format!(
            "{what} must be at least 2, got {value}"
        )));
    }
    Ok(())
}

/// Convenience for [`NamedGroup::bounds`].
pub fn bounds_of(group: &NamedGroup) -> Result<GeneratorBounds> {
    group.bounds()
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGroup::Cyclic(m) => write!(f, "cyclic:{m}"),
            NamedGroup::DirectProductOfCyclics(l) => {
                let parts: Vec<String> = l.iter().map(u32::to_string).collect();
                write!(f, "product:{}", parts.join(","))
            }
            NamedGroup::Dihedral(n) => write!(f, "dihedral:{n}"),
            NamedGroup::Quaternion8 => write!(f, "q8"),
            NamedGroup::Symmetric5 => write!(f, "s5"),
        }
    }
}

impl FromStr for NamedGroup {
    type Err = TGraphError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, param) = match s.split_once(':') {
            Some((n, p)) => (n.trim().to_ascii_lowercase(), Some(p.trim())),
            None => (s.to_ascii_lowercase(), None),
        };
        let parse_err = |reason: &str| TGraphError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let single = |p: Option<&str>| -> Result<u32> {
            p.ok_or_else(|| parse_err("missing parameter"))?
                .parse()
                .map_err(|_| parse_err("parameter must be an unsigned integer"))
        };
        let group = match name.as_str() {
            "cyclic" | "z" => NamedGroup::Cyclic(single(param)?),
            "dihedral" | "d" => NamedGroup::Dihedral(single(param)?),
            "product" | "abelian" => NamedGroup::DirectProductOfCyclics(
                parse_list(param.ok_or_else(|| parse_err("missing factor list"))?)
                    .map_err(|_| parse_err("factors must be comma separated integers"))?,
            ),
            "q8" | "quaternion8" | "quaternion" if param.is_none() => NamedGroup::Quaternion8,
            "s5" | "symmetric5" if param.is_none() => NamedGroup::Symmetric5,
            _ => return Err(parse_err("unknown group name")),
        };
        Ok(group)
    }
}

impl Serialize for NamedGroup {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for NamedGroup {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = String::deserialize(deserializer)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

fn parse_list(raw: &str) -> std::result::Result<Vec<u32>, std::num::ParseIntError> {
    raw.split(',').map(|p| p.trim().parse()).collect()
}

/// A command-line group description: `bounds:<csv>` or a named group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Bounds(Vec<u32>),
    Named(NamedGroup),
}

impl GroupSpec {
    pub fn bounds(&self, max_elements: u64) -> Result<GeneratorBounds> {
        match self {
            GroupSpec::Bounds(raw) => GeneratorBounds::with_cap(raw.clone(), max_elements),
            GroupSpec::Named(g) => g.bounds_with_cap(max_elements),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = TGraphError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().strip_prefix("bounds:") {
            Some(list) => parse_list(list)
                .map(GroupSpec::Bounds)
                .map_err(|_| TGraphError::Parse {
                    input: s.to_string(),
                    reason: "bounds must be comma separated integers".into(),
                }),
            None => s.parse().map(GroupSpec::Named),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Bounds(b) => {
                let parts: Vec<String> = b.iter().map(u32::to_string).collect();
                write!(f, "bounds:{}", parts.join(","))
            }
            GroupSpec::Named(g) => g.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exps(b: &GeneratorBounds) -> Vec<Vec<u32>> {
        b.enumerate_elements()
            .iter()
            .map(|x| x.exponents().to_vec())
            .collect()
    }

    #[test]
    fn named_bounds_table() {
        assert_eq!(
            NamedGroup::Dihedral(4).bounds().unwrap().as_slice(),
            &[2, 4]
        );
        assert_eq!(
            NamedGroup::Quaternion8.bounds().unwrap().as_slice(),
            &[2, 4]
        );
        assert_eq!(
            NamedGroup::Symmetric5.bounds().unwrap().as_slice(),
            &[2, 3, 4, 5]
        );
        assert_eq!(NamedGroup::Cyclic(12).bounds().unwrap().as_slice(), &[12]);
        assert_eq!(
            bounds_of(&NamedGroup::DirectProductOfCyclics(vec![2, 4]))
                .unwrap()
                .as_slice(),
            &[2, 4]
        );
    }

    #[test]
    fn named_parameter_below_two_rejected() {
        for g in [
            NamedGroup::Cyclic(1),
            NamedGroup::Dihedral(0),
            NamedGroup::DirectProductOfCyclics(vec![3, 1]),
            NamedGroup::DirectProductOfCyclics(vec![]),
        ] {
            assert!(
                matches!(g.bounds(), Err(TGraphError::InvalidParameter(_))),
                "{g:?}"
            );
        }
    }

    #[test]
    fn trivial_factor_rejected() {
        assert!(matches!(
            GeneratorBounds::new(vec![2, 1, 3]),
            Err(TGraphError::InvalidParameter(_))
        ));
        assert!(GeneratorBounds::new(vec![]).is_err());
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            GeneratorBounds::new(vec![1000, 1001]),
            Err(TGraphError::SizeLimit { .. })
        ));
        assert!(GeneratorBounds::new(vec![1000, 1000]).is_ok());
        assert!(matches!(
            GeneratorBounds::with_cap(vec![2, 4], 7),
            Err(TGraphError::SizeLimit { .. })
        ));
        // overflow must not wrap around
        assert!(GeneratorBounds::new(vec![u32::MAX; 6]).is_err());
    }

    #[test]
    fn lexicographic_enumeration() {
        let b = GeneratorBounds::new(vec![2, 2]).unwrap();
        assert_eq!(
            exps(&b),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        let b = GeneratorBounds::new(vec![3]).unwrap();
        assert_eq!(exps(&b), vec![vec![0], vec![1], vec![2]]);
        let b = GeneratorBounds::new(vec![2, 4]).unwrap();
        let all = exps(&b);
        assert_eq!(all.len(), 8);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[7], vec![1, 3]);
    }

    #[test]
    fn element_validation() {
        let b = GeneratorBounds::new(vec![2, 4]).unwrap();
        assert!(b.element(vec![1, 3]).is_ok());
        assert!(b.element(vec![2, 0]).is_err());
        assert!(b.element(vec![0]).is_err());
        assert!(b.element_at(8).is_err());
        let alien = GeneratorBounds::new(vec![3, 4])
            .unwrap()
            .element(vec![2, 0])
            .unwrap();
        assert!(b.index_of(&alien).is_err());
    }

    #[test]
    fn words() {
        let b = GeneratorBounds::new(vec![2, 4]).unwrap();
        assert_eq!(b.element(vec![0, 0]).unwrap().word(), "1");
        assert_eq!(b.element(vec![1, 3]).unwrap().word(), "a^1 b^3");
        assert_eq!(b.element(vec![0, 2]).unwrap().word(), "b^2");
    }

    #[test]
    fn group_spec_grammar() {
        assert_eq!(
            "bounds:2,4".parse::<GroupSpec>().unwrap(),
            GroupSpec::Bounds(vec![2, 4])
        );
        assert_eq!(
            "dihedral:7".parse::<GroupSpec>().unwrap(),
            GroupSpec::Named(NamedGroup::Dihedral(7))
        );
        assert_eq!(
            "q8".parse::<GroupSpec>().unwrap(),
            GroupSpec::Named(NamedGroup::Quaternion8)
        );
        assert_eq!(
            "s5".parse::<GroupSpec>().unwrap(),
            GroupSpec::Named(NamedGroup::Symmetric5)
        );
        assert_eq!(
            "cyclic:12".parse::<GroupSpec>().unwrap(),
            GroupSpec::Named(NamedGroup::Cyclic(12))
        );
        for bad in ["dihedral", "dihedral:x", "bounds:2,,4", "klein", "q8:3", ""] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
        for good in [
            "dihedral:7",
            "q8",
            "s5",
            "cyclic:12",
            "product:2,3",
            "bounds:2,4",
        ] {
            assert_eq!(good.parse::<GroupSpec>().unwrap().to_string(), good);
        }
    }

    #[test]
    fn named_group_json_is_tagged_string() {
        let g = NamedGroup::Dihedral(7);
        assert_eq!(serde_json::to_string(&g).unwrap(), "\"dihedral:7\"");
        let back: NamedGroup = serde_json::from_str("\"s5\"").unwrap();
        assert_eq!(back, NamedGroup::Symmetric5);
    }

    #[test]
    fn bounds_json_is_plain_array() {
        let b = GeneratorBounds::new(vec![2, 4]).unwrap();
        assert_eq!(serde_json::to_string(&b).unwrap(), "[2,4]");
        let back: GeneratorBounds = serde_json::from_str("[3,5]").unwrap();
        assert_eq!(back.as_slice(), &[3, 5]);
        assert!(serde_json::from_str::<GeneratorBounds>("[3,1]").is_err());
    }
}
