//! Permutations on `{0..n-1}` and the cycle-notation codec.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A point moved by a permutation. Degrees stay small in practice; `u16`
/// keeps full element tables compact.
pub type Point = u16;

/// A bijection on `{0..degree-1}`, stored as the image of every point.
///
/// Points are 0-based internally; cycle-notation I/O is 1-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Box<[Point]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        assert!(degree >= 1, "degree must be positive");
        assert!(degree <= Point::MAX as usize + 1, "degree too large");
        Permutation {
            images: (0..degree as Point).collect(),
        }
    }

    /// Builds a permutation from its image table, checking bijectivity.
    pub fn from_images(images: Vec<Point>) -> Result<Permutation> {
        let n = images.len();
        if n == 0 || n > Point::MAX as usize + 1 {
            return Err(Error::InvalidParameter(format!(
                "degree {n} out of range (1..={})",
                Point::MAX as usize + 1
            )));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if (v as usize) >= n || seen[v as usize] {
                return Err(Error::InvalidParameter(format!(
                    "images are not a bijection on 0..{n}"
                )));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: Point) -> Point {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| i == v as usize)
    }

    /// Product in "apply `self` first, then `other`" order, checking degrees.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self * other)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0 as Point; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as Point;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Order of the permutation: lcm of its cycle lengths.
    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        let mut visited = vec![false; self.degree()];
        for start in 0..self.degree() {
            if visited[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !visited[p] {
                visited[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    pub fn is_involution(&self) -> bool {
        self.order() == 2
    }

    /// Number of points not fixed by the permutation (support size).
    pub fn moved_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i != v as usize)
            .count()
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<Point>> {
        let mut cycles = Vec::new();
        let mut visited = vec![false; self.degree()];
        for start in 0..self.degree() {
            if visited[start] || self.images[start] as usize == start {
                visited[start] = true;
                continue;
            }
            let mut cycle = vec![start as Point];
            visited[start] = true;
            let mut p = self.images[start] as usize;
            while p != start {
                visited[p] = true;
                cycle.push(p as Point);
                p = self.images[p] as usize;
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Parses disjoint cycles of 1-based points, e.g. `(1 2)(3 4)`.
    ///
    /// Points within a cycle are separated by whitespace or commas; cycles
    /// may be juxtaposed or separated the same way. `()` or `id` denote the
    /// identity. Fixed points may be written as one-point cycles or omitted.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        if degree == 0 || degree > Point::MAX as usize + 1 {
            return Err(Error::InvalidParameter(format!(
                "degree {degree} out of range"
            )));
        }
        if text.trim() == "id" {
            return Ok(Permutation::identity(degree));
        }

        let parse_err = |pos: usize, msg: String| Error::Parse { pos, msg };
        let mut images: Vec<Point> = (0..degree as Point).collect();
        let mut seen = vec![false; degree];
        let mut chars = text.char_indices().peekable();
        let mut any_cycle = false;

        let skip_separators = |chars: &mut std::iter::Peekable<std::str::CharIndices>| {
            while let Some(&(_, c)) = chars.peek() {
                if c.is_whitespace() || c == ',' {
                    chars.next();
                } else {
                    break;
                }
            }
        };

        skip_separators(&mut chars);
        while let Some(&(pos, c)) = chars.peek() {
            if c != '(' {
                return Err(parse_err(pos, format!("expected '(' but found {c:?}")));
            }
            chars.next();
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                skip_separators(&mut chars);
                match chars.peek() {
                    None => return Err(parse_err(text.len(), "unclosed '('".into())),
                    Some(&(_, ')')) => {
                        chars.next();
                        break;
                    }
                    Some(&(pos, c)) if c.is_ascii_digit() => {
                        let mut value = 0usize;
                        while let Some(&(_, d)) = chars.peek() {
                            if let Some(digit) = d.to_digit(10) {
                                value = value * 10 + digit as usize;
                                if value > Point::MAX as usize + 1 {
                                    return Err(parse_err(pos, "point too large".to_string()));
                                }
                                chars.next();
                            } else {
                                break;
                            }
                        }
                        if value == 0 {
                            return Err(parse_err(pos, "points are 1-based; 0 is invalid".into()));
                        }
                        if value > degree {
                            return Err(parse_err(
                                pos,
                                format!("point {value} exceeds degree {degree}"),
                            ));
                        }
                        if seen[value - 1] {
                            return Err(parse_err(pos, format!("repeated point {value}")));
                        }
                        seen[value - 1] = true;
                        cycle.push(value - 1);
                    }
                    Some(&(pos, c)) => {
                        return Err(parse_err(pos, format!("unexpected character {c:?}")));
                    }
                }
            }
            for k in 0..cycle.len() {
                images[cycle[k]] = cycle[(k + 1) % cycle.len()] as Point;
            }
            any_cycle = true;
            skip_separators(&mut chars);
        }

        if !any_cycle {
            return Err(parse_err(0, "expected cycles, '()' or 'id'".into()));
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Disjoint-cycle notation with 1-based points; the identity prints as
    /// `()`. Reparsing the output yields the same permutation.
    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut out = String::new();
        for cycle in cycles {
            out.push('(');
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                out.push_str(&(p + 1).to_string());
            }
            out.push(')');
        }
        out
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// `p * q` applies `p` first, then `q`. Panics on degree mismatch; use
    /// [`Permutation::compose`] for the checked form.
    fn mul(self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&v| other.images[v as usize])
                .collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.cycle_string(), self.degree())
    }
}
