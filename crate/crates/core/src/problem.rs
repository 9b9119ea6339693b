//! Avoidance targets: a pair of forbidden shapes for two-color problems, or a
//! generalized constraint `GR(r, K_s, t)`.

use std::fmt;
use std::str::FromStr;

use crate::coloring::MAX_COLORS;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ForbiddenShape {
    /// `B_k`: a spine edge plus `k` pages adjacent to both spine ends.
    Book(usize),
    /// `W_k`: a hub joined to every vertex of a cycle on `k - 1` vertices.
    Wheel(usize),
    /// `K_k`.
    Clique(usize),
}

impl ForbiddenShape {
    /// Vertex count of the shape.
    pub fn order(self) -> usize {
        match self {
            ForbiddenShape::Book(k) => k + 2,
            ForbiddenShape::Wheel(k) | ForbiddenShape::Clique(k) => k,
        }
    }

    fn validate(self) -> std::result::Result<(), String> {
        match self {
            ForbiddenShape::Book(0) => Err("books need at least one page".into()),
            ForbiddenShape::Wheel(k) if k < 4 => Err("wheels need at least 4 vertices".into()),
            ForbiddenShape::Clique(k) if k < 2 => Err("cliques need at least 2 vertices".into()),
            s if s.order() > 64 => Err("shape larger than 64 vertices".into()),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ForbiddenShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenShape::Book(k) => write!(f, "B{k}"),
            ForbiddenShape::Wheel(k) => write!(f, "W{k}"),
            ForbiddenShape::Clique(k) => write!(f, "K{k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProblemSpec {
    /// No `left` in the graph (color 1), no `right` in its complement (color 2).
    TwoColor {
        left: ForbiddenShape,
        right: ForbiddenShape,
    },
    /// Every `K_s` in an `r`-coloring must use more than `t` colors.
    Generalized { r: usize, s: usize, t: usize },
}

impl ProblemSpec {
    pub fn two_color(left: ForbiddenShape, right: ForbiddenShape) -> Result<Self> {
        for shape in [left, right] {
            shape.validate().map_err(|reason| Error::Problem {
                token: shape.to_string(),
                reason,
            })?;
        }
        Ok(ProblemSpec::TwoColor { left, right })
    }

    pub fn generalized(r: usize, s: usize, t: usize) -> Result<Self> {
        let token = format!("GR:{r},K{s},{t}");
        let fail = |reason: &str| Error::Problem {
            token: token.clone(),
            reason: reason.into(),
        };
        if !(3..=64).contains(&s) {
            return Err(fail("clique order must be in 3..=64"));
        }
        if t == 0 || t >= s * (s - 1) / 2 {
            return Err(fail("t must satisfy 1 <= t < C(s,2)"));
        }
        if r < t + 1 {
            return Err(fail("need r >= t + 1 colors"));
        }
        if r > MAX_COLORS {
            return Err(fail("at most 8 colors are supported"));
        }
        Ok(ProblemSpec::Generalized { r, s, t })
    }

    /// Number of colors a coloring for this problem uses.
    pub fn colors(&self) -> usize {
        match self {
            ProblemSpec::TwoColor { .. } => 2,
            ProblemSpec::Generalized { r, .. } => *r,
        }
    }

    pub fn is_two_color(&self) -> bool {
        matches!(self, ProblemSpec::TwoColor { .. })
    }
}

fn parse_shape(token: &str) -> Result<ForbiddenShape> {
    let token = token.trim();
    let err = |reason: &str| Error::Problem {
        token: token.to_string(),
        reason: reason.into(),
    };
    let mut chars = token.chars();
    let kind = chars.next().ok_or_else(|| err("empty shape"))?;
    let size: usize = chars
        .as_str()
        .parse()
        .map_err(|_| err("expected a size after the shape letter"))?;
    let shape = match kind.to_ascii_uppercase() {
        'B' => ForbiddenShape::Book(size),
        'W' => ForbiddenShape::Wheel(size),
        'K' => ForbiddenShape::Clique(size),
        _ => return Err(err("shape must be B<k>, W<k> or K<k>")),
    };
    shape.validate().map_err(|reason| Error::Problem {
        token: token.to_string(),
        reason,
    })?;
    Ok(shape)
}

/// Parse `"B<i>,B<j>"`, `"W<i>,W<j>"`, `"K<i>,K<j>"` (shapes may be mixed) or
/// `"GR:<r>,K<s>,<t>"`.
pub fn parse_problem(text: &str) -> Result<ProblemSpec> {
    let text = text.trim();
    if let Some(rest) = text
        .strip_prefix("GR:")
        .or_else(|| text.strip_prefix("gr:"))
    {
        let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Problem {
                token: rest.to_string(),
                reason: "expected GR:<r>,K<s>,<t>".into(),
            });
        }
        let num = |t: &str| {
            t.parse::<usize>().map_err(|_| Error::Problem {
                token: t.to_string(),
                reason: "expected a number".into(),
            })
        };
        let r = num(parts[0])?;
        let s = match parts[1].strip_prefix('K').or_else(|| parts[1].strip_prefix('k')) {
            Some(s) => num(s)?,
            None => {
                return Err(Error::Problem {
                    token: parts[1].to_string(),
                    reason: "expected K<s>".into(),
                })
            }
        };
        let t = num(parts[2])?;
        return ProblemSpec::generalized(r, s, t);
    }
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Problem {
            token: text.to_string(),
            reason: "expected two shapes separated by a comma".into(),
        });
    }
    ProblemSpec::two_color(parse_shape(parts[0])?, parse_shape(parts[1])?)
}

impl FromStr for ProblemSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_problem(s)
    }
}

impl fmt::Display for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemSpec::TwoColor { left, right } => write!(f, "{left},{right}"),
            ProblemSpec::Generalized { r, s, t } => write!(f, "GR:{r},K{s},{t}"),
        }
    }
}
