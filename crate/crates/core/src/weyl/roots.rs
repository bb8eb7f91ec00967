use std::collections::BTreeSet;

use serde_json::Value;

use super::WeylError;
use crate::linalg::RationalMatrix;
use crate::polyring::{MonomialOrder, Polynomial, Ring};
use crate::rational::Rational;

/// Realization choice for types that have more than one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Realization {
    /// A_n in n+1 coordinates, G₂ in the plane x₁+x₂+x₃ = 0 of ℝ³.
    #[default]
    Ambient,
    /// Coordinates in the basis of simple roots with the Cartan form; only
    /// differs from `Ambient` for A_n and G₂.
    Essential,
}

impl Realization {
    pub fn as_str(&self) -> &'static str {
        match self {
            Realization::Ambient => "ambient",
            Realization::Essential => "essential",
        }
    }
}

impl std::str::FromStr for Realization {
    type Err = WeylError;

    fn from_str(s: &str) -> Result<Self, WeylError> {
        match s {
            "ambient" => Ok(Realization::Ambient),
            "essential" => Ok(Realization::Essential),
            other => Err(WeylError::InvalidSpec(format!("unknown realization `{other}`"))),
        }
    }
}

/// A reduced crystallographic root system in ℚ^n with a rational inner
/// product (the Gram matrix `form`).
///
/// Roots are covectors: the root `α` is the linear form `Σ αᵢ xᵢ` on the
/// x-space, and its coroot is the linear form `Σ α∨ᵢ yᵢ` with
/// `α∨ = 2·Gα / (α, α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    label: String,
    ambient: usize,
    form: RationalMatrix,
    simple: Vec<Vec<Rational>>,
    positive: Vec<Vec<Rational>>,
}

fn unit(n: usize, i: usize, c: i64) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; n];
    v[i] = Rational::from_int(c);
    v
}

fn combo(n: usize, parts: &[(usize, i64)]) -> Vec<Rational> {
    let mut v = vec![Rational::ZERO; n];
    for &(i, c) in parts {
        v[i] = &v[i] + &Rational::from_int(c);
    }
    v
}

fn int_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&c| Rational::from_int(c)).collect()
}

fn neg(v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|c| -c.clone()).collect()
}

/// Splits labels such as `B3`, `B_3`, `b3` into letter and rank.
fn parse_label(label: &str) -> Option<(char, usize)> {
    let s = label.trim();
    let mut chars = s.chars();
    let letter = chars.next()?.to_ascii_uppercase();
    let rest: String = chars.collect();
    let rank: usize = rest.trim_start_matches('_').parse().ok()?;
    Some((letter, rank))
}

impl RootSystem {
    /// Builds a named root system in its default realization.
    pub fn build(label: &str) -> Result<Self, WeylError> {
        Self::build_with(label, Realization::Ambient)
    }

    pub fn build_with(label: &str, realization: Realization) -> Result<Self, WeylError> {
        let unsupported = || WeylError::UnsupportedLabel(label.to_string());
        let (letter, n) = parse_label(label).ok_or_else(unsupported)?;
        let ok_rank = match letter {
            'A' => (1..=4).contains(&n),
            'B' | 'C' => (2..=4).contains(&n),
            'D' => (2..=4).contains(&n),
            'G' => n == 2,
            _ => false,
        };
        if !ok_rank {
            return Err(unsupported());
        }
        let name = format!("{letter}{n}");
        if realization == Realization::Essential && matches!(letter, 'A' | 'G') {
            let cartan = cartan_matrix(letter, n);
            let sym = symmetrized_form(letter, n, &cartan);
            let simple: Vec<Vec<Rational>> = (0..n).map(|i| unit(n, i, 1)).collect();
            return Self::from_simple_roots(format!("{name}-essential"), simple, Some(sym));
        }
        let mut pos: Vec<Vec<Rational>> = Vec::new();
        let simple: Vec<Vec<Rational>>;
        match letter {
            'A' => {
                let m = n + 1;
                for i in 0..m {
                    for j in i + 1..m {
                        pos.push(combo(m, &[(i, 1), (j, -1)]));
                    }
                }
                simple = (0..n).map(|i| combo(m, &[(i, 1), (i + 1, -1)])).collect();
            }
            'B' | 'C' | 'D' => {
                for i in 0..n {
                    for j in i + 1..n {
                        pos.push(combo(n, &[(i, 1), (j, -1)]));
                    }
                }
                for i in 0..n {
                    for j in i + 1..n {
                        pos.push(combo(n, &[(i, 1), (j, 1)]));
                    }
                }
                let mut s: Vec<Vec<Rational>> = (0..n - 1).map(|i| combo(n, &[(i, 1), (i + 1, -1)])).collect();
                match letter {
                    'B' => {
                        pos.extend((0..n).map(|i| unit(n, i, 1)));
                        s.push(unit(n, n - 1, 1));
                    }
                    'C' => {
                        pos.extend((0..n).map(|i| unit(n, i, 2)));
                        s.push(unit(n, n - 1, 2));
                    }
                    _ => s.push(combo(n, &[(n - 2, 1), (n - 1, 1)])),
                }
                simple = s;
            }
            'G' => {
                pos = [
                    [1, -1, 0],
                    [1, 0, -1],
                    [0, 1, -1],
                    [2, -1, -1],
                    [-1, 2, -1],
                    [1, 1, -2],
                ]
                .iter()
                .map(|r| int_vec(r))
                .collect();
                simple = vec![int_vec(&[1, -1, 0]), int_vec(&[-1, 2, -1])];
            }
            _ => return Err(unsupported()),
        }
        let ambient = pos[0].len();
        Ok(Self {
            label: name,
            ambient,
            form: RationalMatrix::identity(ambient),
            simple,
            positive: pos,
        })
    }

    /// Root system generated by the given simple roots under reflections.
    ///
    /// `form` defaults to the standard inner product. Positive roots are
    /// those on the positive side of the vector `v` with `(v, αᵢ) = 1` for
    /// every simple root, listed in the order they are discovered.
    pub fn from_simple_roots(
        label: impl Into<String>,
        simple: Vec<Vec<Rational>>,
        form: Option<RationalMatrix>,
    ) -> Result<Self, WeylError> {
        let n = simple.first().map_or(0, Vec::len);
        if n == 0 || simple.iter().any(|r| r.len() != n) {
            return Err(WeylError::InvalidRoots("simple roots must be nonempty vectors of equal length".into()));
        }
        if 2 * n > crate::polyring::MAX_VARS {
            return Err(WeylError::InvalidRoots(format!("ambient dimension {n} is too large")));
        }
        let form = form.unwrap_or_else(|| RationalMatrix::identity(n));
        if form.rows() != n || !form.is_square() || form != form.transpose() || form.determinant().is_zero() {
            return Err(WeylError::InvalidRoots("form must be a nonsingular symmetric n×n matrix".into()));
        }
        let k = simple.len();
        let as_matrix = RationalMatrix::from_rows(simple.clone());
        if as_matrix.rank() != k {
            return Err(WeylError::InvalidRoots("simple roots are linearly dependent".into()));
        }
        let mut rs = Self {
            label: label.into(),
            ambient: n,
            form,
            simple: simple.clone(),
            positive: Vec::new(),
        };
        if simple.iter().any(|a| rs.inner(a, a).signum() <= 0) {
            return Err(WeylError::InvalidRoots("roots must have positive length".into()));
        }
        // closure under simple reflections
        let mut seen: BTreeSet<Vec<Rational>> = BTreeSet::new();
        let mut order: Vec<Vec<Rational>> = Vec::new();
        let mut queue: std::collections::VecDeque<Vec<Rational>> = simple.iter().cloned().collect();
        for s in &simple {
            seen.insert(s.clone());
            order.push(s.clone());
        }
        let mats: Vec<RationalMatrix> = simple.iter().map(|a| rs.covector_reflection(a)).collect();
        while let Some(r) = queue.pop_front() {
            for m in &mats {
                let img = m.mul_vec(&r);
                if seen.insert(img.clone()) {
                    if seen.len() > 400 {
                        return Err(WeylError::InvalidRoots("reflection closure does not terminate".into()));
                    }
                    order.push(img.clone());
                    queue.push_back(img);
                }
            }
        }
        let gram = RationalMatrix::from_rows(
            simple.iter().map(|a| simple.iter().map(|b| rs.inner(a, b)).collect()).collect(),
        );
        let c = gram
            .solve(&vec![Rational::ONE; k])
            .ok_or_else(|| WeylError::InvalidRoots("degenerate Gram matrix".into()))?;
        let mut v = vec![Rational::ZERO; n];
        for (ci, a) in c.iter().zip(&simple) {
            for (vj, aj) in v.iter_mut().zip(a) {
                *vj = vj.add_mul(ci, aj);
            }
        }
        for r in order {
            let s = rs.inner(&v, &r);
            if s.is_zero() {
                return Err(WeylError::InvalidRoots("root orthogonal to the chamber vector".into()));
            }
            if s.is_negative() {
                let p = neg(&r);
                if !seen.contains(&p) {
                    return Err(WeylError::InvalidRoots("root set is not symmetric".into()));
                }
            } else {
                rs.positive.push(r);
            }
        }
        Ok(rs)
    }

    /// Parses `{"label": "B3"}`, optionally with `"realization": "essential"`,
    /// or `{"custom": {"simple_roots": [[..]], "form": [[..]], "label": ".."}}`.
    /// Entries may be JSON integers or strings `"p/q"`.
    pub fn from_json(s: &str) -> Result<Self, WeylError> {
        let v: Value = serde_json::from_str(s).map_err(|e| WeylError::InvalidSpec(e.to_string()))?;
        Self::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<Self, WeylError> {
        if let Some(label) = v.get("label").and_then(Value::as_str) {
            let real = match v.get("realization").and_then(Value::as_str) {
                None => Realization::Ambient,
                Some(r) => r.parse()?,
            };
            return Self::build_with(label, real);
        }
        let custom = v
            .get("custom")
            .ok_or_else(|| WeylError::InvalidSpec("expected `label` or `custom`".into()))?;
        let rows = |key: &str| -> Result<Option<Vec<Vec<Rational>>>, WeylError> {
            let Some(arr) = custom.get(key) else {
                return Ok(None);
            };
            let arr = arr
                .as_array()
                .ok_or_else(|| WeylError::InvalidSpec(format!("`{key}` must be an array")))?;
            arr.iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| WeylError::InvalidSpec(format!("`{key}` rows must be arrays")))?
                        .iter()
                        .map(json_rational)
                        .collect()
                })
                .collect::<Result<Vec<_>, _>>()
                .map(Some)
        };
        let simple = rows("simple_roots")?.ok_or_else(|| WeylError::InvalidSpec("missing `simple_roots`".into()))?;
        let form = rows("form")?.map(RationalMatrix::from_rows);
        let label = custom.get("label").and_then(Value::as_str).unwrap_or("custom");
        Self::from_simple_roots(label, simple, form)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn form(&self) -> &RationalMatrix {
        &self.form
    }

    pub fn simple_roots(&self) -> &[Vec<Rational>] {
        &self.simple
    }

    /// Positive roots in canonical order: for the classical types
    /// `eᵢ−eⱼ`, then `eᵢ+eⱼ` (i<j, lexicographic), then `eᵢ` or `2eᵢ`.
    pub fn positive_roots(&self) -> &[Vec<Rational>] {
        &self.positive
    }

    /// Positive roots followed by their negatives.
    pub fn all_roots(&self) -> Vec<Vec<Rational>> {
        let mut out = self.positive.clone();
        out.extend(self.positive.iter().map(|r| neg(r)));
        out
    }

    pub fn inner(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let gb = self.form.mul_vec(b);
        a.iter().zip(&gb).fold(Rational::ZERO, |acc, (x, y)| acc.add_mul(x, y))
    }

    pub fn is_root(&self, v: &[Rational]) -> bool {
        let n = neg(v);
        self.positive.iter().any(|r| r.as_slice() == v || *r == n)
    }

    /// `α∨ = 2·Gα / (α, α)`.
    pub fn coroot(&self, alpha: &[Rational]) -> Vec<Rational> {
        let s = &Rational::from_int(2) / &self.inner(alpha, alpha);
        self.form.mul_vec(alpha).iter().map(|c| c * &s).collect()
    }

    pub fn coroots(&self) -> Vec<Vec<Rational>> {
        self.positive.iter().map(|a| self.coroot(a)).collect()
    }

    /// Reflection acting on root coordinates: `λ ↦ λ − 2(α,λ)/(α,α)·α`.
    fn covector_reflection(&self, alpha: &[Rational]) -> RationalMatrix {
        let n = self.ambient;
        let ga = self.form.mul_vec(alpha);
        let s = &Rational::from_int(2) / &self.inner(alpha, alpha);
        let mut m = RationalMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = &m[(i, j)] - &(&(&alpha[i] * &ga[j]) * &s);
            }
        }
        m
    }

    /// Substitution matrix of `s_α` on the x-variables: `xᵢ ↦ Σⱼ Mᵢⱼ xⱼ`,
    /// so that `s_α` sends the linear form `α` to `−α`.
    pub fn reflection_matrix(&self, alpha: &[Rational]) -> Result<RationalMatrix, WeylError> {
        if alpha.len() != self.ambient || !self.is_root(alpha) {
            return Err(WeylError::NotARoot);
        }
        Ok(self.covector_reflection(alpha).transpose())
    }

    pub fn simple_reflections(&self) -> Vec<RationalMatrix> {
        self.simple
            .iter()
            .map(|a| self.reflection_matrix(a).expect("simple roots are roots"))
            .collect()
    }

    /// Polynomial ring `ℚ[x₁..xₙ, y₁..yₙ]` for this root system.
    pub fn ring(&self) -> Ring {
        Ring::new(self.ambient, MonomialOrder::Grevlex)
    }

    /// The root as a linear form in the x-variables.
    pub fn root_form(&self, ring: Ring, alpha: &[Rational]) -> Polynomial {
        Polynomial::linear_form(ring, 0, alpha)
    }

    /// The coroot as a linear form in the y-variables.
    pub fn coroot_form(&self, ring: Ring, alpha: &[Rational]) -> Polynomial {
        Polynomial::linear_form(ring, self.ambient, &self.coroot(alpha))
    }
}

fn json_rational(v: &Value) -> Result<Rational, WeylError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Rational::from_int)
            .ok_or_else(|| WeylError::InvalidSpec(format!("non-integer number {n}; use a \"p/q\" string"))),
        Value::String(s) => s.parse().map_err(|_| WeylError::InvalidSpec(format!("invalid rational `{s}`"))),
        other => Err(WeylError::InvalidSpec(format!("expected a number, got {other}"))),
    }
}

fn cartan_matrix(letter: char, n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        c[i][i] = 2;
        if i + 1 < n {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    if letter == 'G' {
        // α₁ short, α₂ long
        c[1][0] = -3;
    }
    c
}

/// Gram matrix of the simple roots, `(αᵢ, αⱼ) = Cᵢⱼ·(αⱼ, αⱼ)/2`.
fn symmetrized_form(letter: char, n: usize, cartan: &[Vec<i64>]) -> RationalMatrix {
    // (αᵢ, αⱼ) = Cᵢⱼ·(αⱼ, αⱼ)/2 with squared lengths 2 (short) and 6 (long, G₂)
    let len2: Vec<i64> = (0..n).map(|i| if letter == 'G' && i == 1 { 6 } else { 2 }).collect();
    RationalMatrix::from_rows(
        (0..n)
            .map(|i| (0..n).map(|j| Rational::new(cartan[i][j] * len2[j], 2)).collect())
            .collect(),
    )
}
