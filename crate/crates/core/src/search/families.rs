//! Standard t-norm families on the n-element chain `0 < 1 < ... < n-1`.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{default_labels, AlgebraTables, FiniteMtlAlgebra, MAX_CARRIER};
use crate::error::{MtlError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Lukasiewicz,
    Godel,
    NilpotentMinimum,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Lukasiewicz, Family::Godel, Family::NilpotentMinimum];

    pub fn name(self) -> &'static str {
        match self {
            Family::Lukasiewicz => "lukasiewicz",
            Family::Godel => "godel",
            Family::NilpotentMinimum => "nilpotent_minimum",
        }
    }

    fn tnorm(self, n: usize, i: usize, j: usize) -> usize {
        let top = n - 1;
        match self {
            Family::Lukasiewicz => (i + j).saturating_sub(top),
            Family::Godel => i.min(j),
            // 0 when i <= neg(j) = top - j, min otherwise
            Family::NilpotentMinimum => {
                if i + j <= top {
                    0
                } else {
                    i.min(j)
                }
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = MtlError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lukasiewicz" | "luk" => Ok(Family::Lukasiewicz),
            "godel" | "goedel" => Ok(Family::Godel),
            "nilpotent_minimum" | "nm" => Ok(Family::NilpotentMinimum),
            other => Err(MtlError::UnknownFamily(other.to_string())),
        }
    }
}

/// Builds the chain algebra with the given multiplication table (row-major,
/// indices in chain order) and its residuum `y -> z = max{x | x*y <= z}`.
/// The result is constructed but not validated.
pub(crate) fn chain_from_mul(name: String, n: usize, mul: &[u8]) -> Result<FiniteMtlAlgebra> {
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| mul[i * n + j] as usize).collect())
        .collect();
    let imp = (0..n)
        .map(|y| {
            (0..n)
                .map(|z| (0..n).rev().find(|&x| rows[x][y] <= z).unwrap_or(0))
                .collect()
        })
        .collect();
    let meet = (0..n).map(|i| (0..n).map(|j| i.min(j)).collect()).collect();
    let join = (0..n).map(|i| (0..n).map(|j| i.max(j)).collect()).collect();
    FiniteMtlAlgebra::construct(AlgebraTables {
        name,
        labels: default_labels(n),
        bot: 0,
        top: n - 1,
        mul: rows,
        imp,
        meet: Some(meet),
        join: Some(join),
    })
}

/// The n-element member of `family`, validated.
pub fn gen_family(family: Family, n: usize) -> Result<FiniteMtlAlgebra> {
    if !(2..=MAX_CARRIER).contains(&n) {
        return Err(MtlError::SearchSize {
            size: n,
            range: "2..=64",
            what: "family generators",
        });
    }
    let mul: Vec<u8> = (0..n * n)
        .map(|k| family.tnorm(n, k / n, k % n) as u8)
        .collect();
    let short = match family {
        Family::Lukasiewicz => "luk",
        Family::Godel => "godel",
        Family::NilpotentMinimum => "nm",
    };
    let a = chain_from_mul(format!("{short}{n}"), n, &mul)?;
    Ok(a.into_validated()
        .expect("family t-norms on a finite chain are MTL"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{is_godel, is_imtl, is_mv};
    use crate::stabilizers::impl_right;
    use crate::{Element, Subset};

    #[test]
    fn families_land_in_their_classes() {
        for n in 2..=9 {
            assert!(is_mv(&gen_family(Family::Lukasiewicz, n).unwrap()));
            assert!(is_godel(&gen_family(Family::Godel, n).unwrap()));
            assert!(is_imtl(&gen_family(Family::NilpotentMinimum, n).unwrap()));
        }
    }

    #[test]
    fn nilpotent_minimum_right_stabilizer() {
        let a = gen_family(Family::NilpotentMinimum, 7).unwrap();
        let r = impl_right(&a, &Subset::singleton(7, Element::new(4))).unwrap();
        let got: Vec<usize> = r.iter().map(Element::index).collect();
        // top always satisfies x -> 1 = 1
        assert_eq!(got, [2, 3, 6]);
    }

    #[test]
    fn parse_names() {
        assert_eq!("nm".parse::<Family>().unwrap(), Family::NilpotentMinimum);
        assert!(matches!(
            "product".parse::<Family>(),
            Err(MtlError::UnknownFamily(_))
        ));
        assert!(gen_family(Family::Godel, 1).is_err());
    }
}
