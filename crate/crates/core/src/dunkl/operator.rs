use std::sync::Arc;

use super::DunklError;
use crate::linalg::RationalMatrix;
use crate::polyring::{exact_divide_linear, partial_derivative, LinearChange, Polynomial, Ring};
use crate::rational::Rational;
use crate::weyl::{RootSystem, WeylGroup};

struct Reflection {
    root: Vec<Rational>,
    coroot: Vec<Rational>,
    form: Polynomial,
    action: LinearChange,
}

/// The reflection data of a root system shared by all of its Dunkl
/// operators: one reflection per positive root.
pub struct DunklContext {
    rs: RootSystem,
    group: WeylGroup,
    ring: Ring,
    reflections: Vec<Reflection>,
}

impl std::fmt::Debug for DunklContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DunklContext")
            .field("label", &self.rs.label())
            .field("reflections", &self.reflections.len())
            .finish()
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::ZERO, |acc, (x, y)| acc.add_mul(x, y))
}

impl DunklContext {
    pub fn new(rs: &RootSystem) -> Result<Arc<Self>, DunklError> {
        let group = WeylGroup::of(rs)?;
        let ring = rs.ring();
        let reflections = rs
            .positive_roots()
            .iter()
            .map(|a| {
                let m = rs.reflection_matrix(a)?;
                let dual = m.inverse().expect("reflections are invertible").transpose();
                let action = LinearChange::new(RationalMatrix::block_diagonal(&m, &dual))?;
                Ok(Reflection {
                    root: a.clone(),
                    coroot: rs.coroot(a),
                    form: rs.root_form(ring, a),
                    action,
                })
            })
            .collect::<Result<Vec<_>, DunklError>>()?;
        Ok(Arc::new(Self {
            rs: rs.clone(),
            group,
            ring,
            reflections,
        }))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.rs.ambient_dim()
    }

    /// The direction `w·y`, chosen so that `w(∂_y f) = ∂_{w·y}(w f)`.
    pub fn act_on_direction(&self, w: usize, y: &[Rational]) -> Vec<Rational> {
        self.group.element(self.group.inverse(w)).mul_vec(y)
    }

    fn check_x_only(&self, f: &Polynomial) -> Result<(), DunklError> {
        if f.ring() != self.ring {
            return Err(DunklError::RingMismatch);
        }
        let n = self.rank();
        let ymask = ((1u32 << n) - 1) << n;
        if f.involves(ymask) {
            return Err(DunklError::NotInXVariables);
        }
        Ok(())
    }

    fn reflect(&self, k: usize, f: &Polynomial) -> Result<Polynomial, DunklError> {
        Ok(self.reflections[k].action.apply(f)?)
    }

    fn linear_coefficients(&self, xi: &Polynomial) -> Result<Vec<Rational>, DunklError> {
        self.check_x_only(xi)?;
        if !xi.terms().iter().all(|t| t.mono.degree() == 1) {
            return Err(DunklError::NotLinear);
        }
        Ok((0..self.rank())
            .map(|i| xi.coefficient(&crate::polyring::Monomial::var(i)))
            .collect())
    }
}

/// `D_y = ∂_y − c Σ_{α∈Φ⁺} ⟨α, y⟩ (1 − s_α)/α` acting on `ℚ[x]`.
#[derive(Clone, Debug)]
pub struct DunklOperator {
    context: Arc<DunklContext>,
    direction: Vec<Rational>,
    c: Rational,
}

impl DunklOperator {
    pub fn new(context: &Arc<DunklContext>, c: Rational, direction: Vec<Rational>) -> Result<Self, DunklError> {
        if direction.len() != context.rank() {
            return Err(DunklError::DimensionMismatch {
                expected: context.rank(),
                found: direction.len(),
            });
        }
        if direction.iter().all(Rational::is_zero) {
            return Err(DunklError::ZeroDirection);
        }
        Ok(Self {
            context: Arc::clone(context),
            direction,
            c,
        })
    }

    pub fn direction(&self) -> &[Rational] {
        &self.direction
    }

    pub fn parameter(&self) -> &Rational {
        &self.c
    }

    pub fn context(&self) -> &Arc<DunklContext> {
        &self.context
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, DunklError> {
        let ctx = &*self.context;
        ctx.check_x_only(f)?;
        let mut full = self.direction.clone();
        full.resize(ctx.ring.nvars(), Rational::ZERO);
        let mut out = partial_derivative(f, &full)?;
        if self.c.is_zero() || f.is_zero() {
            return Ok(out);
        }
        for (k, r) in ctx.reflections.iter().enumerate() {
            let pairing = dot(&r.root, &self.direction);
            if pairing.is_zero() {
                continue;
            }
            let diff = f - &ctx.reflect(k, f)?;
            if diff.is_zero() {
                continue;
            }
            let q = exact_divide_linear(&diff, &r.form).map_err(|_| DunklError::DivisionFailure)?;
            out = &out - &q.scale(&(&pairing * &self.c));
        }
        Ok(out)
    }
}

pub fn dunkl_apply(d: &DunklOperator, f: &Polynomial) -> Result<Polynomial, DunklError> {
    d.apply(f)
}

/// First sample with `D_{y₁}D_{y₂}f ≠ D_{y₂}D_{y₁}f`, if any.
pub fn commutativity_witness(
    context: &Arc<DunklContext>,
    c: &Rational,
    samples: &[Polynomial],
    y1: &[Rational],
    y2: &[Rational],
) -> Result<Option<Polynomial>, DunklError> {
    let d1 = DunklOperator::new(context, c.clone(), y1.to_vec())?;
    let d2 = DunklOperator::new(context, c.clone(), y2.to_vec())?;
    for f in samples {
        if d1.apply(&d2.apply(f)?)? != d2.apply(&d1.apply(f)?)? {
            return Ok(Some(f.clone()));
        }
    }
    Ok(None)
}

pub fn check_commutativity(
    context: &Arc<DunklContext>,
    c: &Rational,
    samples: &[Polynomial],
    y1: &[Rational],
    y2: &[Rational],
) -> Result<bool, DunklError> {
    Ok(commutativity_witness(context, c, samples, y1, y2)?.is_none())
}

/// Both sides of `[D_y, ξ] f = ⟨y, ξ⟩ f − c Σ_{α∈Φ⁺} ⟨y, α⟩⟨α∨, ξ⟩ s_α f`.
pub fn defining_relation_sides(
    context: &Arc<DunklContext>,
    c: &Rational,
    xi: &Polynomial,
    y: &[Rational],
    f: &Polynomial,
) -> Result<(Polynomial, Polynomial), DunklError> {
    let coeffs = context.linear_coefficients(xi)?;
    let d = DunklOperator::new(context, c.clone(), y.to_vec())?;
    let lhs = &d.apply(&(xi * f))? - &(xi * &d.apply(f)?);
    let mut rhs = f.scale(&dot(y, &coeffs));
    for (k, r) in context.reflections.iter().enumerate() {
        let w = &(&dot(y, &r.root) * &dot(&r.coroot, &coeffs)) * c;
        if !w.is_zero() {
            rhs = &rhs - &context.reflect(k, f)?.scale(&w);
        }
    }
    Ok((lhs, rhs))
}

pub fn defining_relation_witness(
    context: &Arc<DunklContext>,
    c: &Rational,
    xi: &Polynomial,
    y: &[Rational],
    samples: &[Polynomial],
) -> Result<Option<Polynomial>, DunklError> {
    for f in samples {
        let (lhs, rhs) = defining_relation_sides(context, c, xi, y, f)?;
        if lhs != rhs {
            return Ok(Some(f.clone()));
        }
    }
    Ok(None)
}

pub fn check_defining_relation(
    context: &Arc<DunklContext>,
    c: &Rational,
    xi: &Polynomial,
    y: &[Rational],
    samples: &[Polynomial],
) -> Result<bool, DunklError> {
    Ok(defining_relation_witness(context, c, xi, y, samples)?.is_none())
}
