//! Group actions on frame pairs: the circle on `V`, the torus on `W` and on
//! zero-divisor pairs, and the unit quaternions `S(H_epsilon)` acting on the
//! complement of `H_epsilon` by right multiplication.

use serde::{Deserialize, Serialize};

use crate::element::{inner, Element};
use crate::error::{Error, Result};
use crate::frames::{epsilon, h_eps_basis, in_v, oct_basis, require_h_eps_perp, FramePair};
use crate::linalg::{rank, rank_of};
use crate::report::{Check, Counterexample, Report};
use crate::sample::{self, rng_for, SampleRng};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircleParam {
    pub r: Scalar,
    pub s: Scalar,
}

impl CircleParam {
    pub fn new(r: Scalar, s: Scalar) -> Result<Self> {
        if !(&r.square() + &s.square()).is_one() {
            return Err(Error::pre("circle parameter needs r^2 + s^2 = 1"));
        }
        Ok(CircleParam { r, s })
    }

    pub fn identity() -> Self {
        CircleParam { r: Scalar::one(), s: Scalar::zero() }
    }

    pub fn is_identity(&self) -> bool {
        self.r.is_one() && self.s.is_zero()
    }

    /// Complex multiplication `(r + is)(q + it)`.
    pub fn compose(&self, other: &CircleParam) -> CircleParam {
        CircleParam {
            r: &(&self.r * &other.r) - &(&self.s * &other.s),
            s: &(&self.r * &other.s) + &(&self.s * &other.r),
        }
    }

    pub fn random(rng: &mut SampleRng) -> Self {
        let (r, s) = sample::pythagorean(rng);
        CircleParam { r, s }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusParam {
    /// `(r, s)` acting on the first coordinate.
    pub first: CircleParam,
    /// `(p, q)` acting on the second coordinate.
    pub second: CircleParam,
}

impl TorusParam {
    pub fn identity() -> Self {
        TorusParam { first: CircleParam::identity(), second: CircleParam::identity() }
    }

    pub fn is_identity(&self) -> bool {
        self.first.is_identity() && self.second.is_identity()
    }

    pub fn random(rng: &mut SampleRng) -> Self {
        TorusParam { first: CircleParam::random(rng), second: CircleParam::random(rng) }
    }
}

/// `r e_0 + s eps~ + q eps + p e~_0` with `r^2 + s^2 + q^2 + p^2 = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereParam {
    pub r: Scalar,
    pub s: Scalar,
    pub q: Scalar,
    pub p: Scalar,
}

impl SphereParam {
    pub fn new(r: Scalar, s: Scalar, q: Scalar, p: Scalar) -> Result<Self> {
        let sum = &(&r.square() + &s.square()) + &(&q.square() + &p.square());
        if !sum.is_one() {
            return Err(Error::pre("sphere parameter needs r^2 + s^2 + q^2 + p^2 = 1"));
        }
        Ok(SphereParam { r, s, q, p })
    }

    pub fn identity() -> Self {
        SphereParam { r: Scalar::one(), s: Scalar::zero(), q: Scalar::zero(), p: Scalar::zero() }
    }

    pub fn is_identity(&self) -> bool {
        self.r.is_one() && self.s.is_zero() && self.q.is_zero() && self.p.is_zero()
    }

    pub fn random(rng: &mut SampleRng) -> Self {
        let [r, s, q, p] = sample::sphere_point(rng, 4);
        SphereParam { r, s, q, p }
    }

    /// The element of `H_epsilon` at level `n + 1`.
    pub fn to_element(&self, n: u32) -> Result<Element> {
        let [e0, eps_t, eps, e0_t] = h_eps_basis(n)?;
        Ok(&(&e0.scale(&self.r) + &eps_t.scale(&self.s)) + &(&eps.scale(&self.q) + &e0_t.scale(&self.p)))
    }
}

/// `(a, b) -> (ra - sb, sa + rb)`, i.e. `r alpha + s alpha~`. With `check`
/// the input must lie in `V`.
pub fn s1_act(g: &CircleParam, p: &FramePair, check: bool) -> Result<FramePair> {
    if check && !in_v(p)? {
        return Err(Error::pre("circle action input must lie in V"));
    }
    FramePair::new(&p.a.scale(&g.r) - &p.b.scale(&g.s), &p.a.scale(&g.s) + &p.b.scale(&g.r))
}

/// `(a, b) -> (ra + s a~, pb + q b~)`.
pub fn t2_act(g: &TorusParam, p: &FramePair) -> Result<FramePair> {
    let a = &p.a.scale(&g.first.r) + &p.a.tilde()?.scale(&g.first.s);
    let b = &p.b.scale(&g.second.r) + &p.b.tilde()?.scale(&g.second.s);
    FramePair::new(a, b)
}

/// `alpha -> r alpha + s alpha eps~ + q alpha eps + p alpha~`, right
/// multiplication by the unit quaternion `g`.
pub fn s3_act(alpha: &Element, g: &SphereParam) -> Result<Element> {
    require_h_eps_perp(alpha)?;
    let n = alpha.level() - 1;
    let eps = epsilon(n)?;
    let eps_t = eps.tilde()?;
    let terms = [
        alpha.scale(&g.r),
        (alpha * &eps_t).scale(&g.s),
        (alpha * &eps).scale(&g.q),
        alpha.tilde()?.scale(&g.p),
    ];
    Ok(terms.iter().skip(1).fold(terms[0].clone(), |acc, t| &acc + t))
}

/// The same action written out on halves:
/// `(ra - s b~ + q a~ - p b, rb - s a~ - q b~ + p a)`.
pub fn s3_act_coordinates(alpha: &Element, g: &SphereParam) -> Result<Element> {
    require_h_eps_perp(alpha)?;
    let (a, b) = alpha.split()?;
    let (at, bt) = (a.tilde()?, b.tilde()?);
    let first = &(&a.scale(&g.r) - &bt.scale(&g.s)) + &(&at.scale(&g.q) - &b.scale(&g.p));
    let second = &(&b.scale(&g.r) - &at.scale(&g.s)) + &(&a.scale(&g.p) - &bt.scale(&g.q));
    Element::double(&first, &second)
}

/// Coordinates `(r, s, q, p)` of `u` in the basis `e_0, eps~, eps, e~_0`;
/// `u` must lie in `H_epsilon`.
pub fn h_eps_coords(u: &Element) -> Result<[Scalar; 4]> {
    if u.level() < 2 {
        return Err(Error::LevelTooLow { min: 2, got: u.level() });
    }
    let basis = h_eps_basis(u.level() - 1)?;
    let coords: Vec<Scalar> = basis.iter().map(|v| inner(u, v)).collect::<Result<_>>()?;
    let rebuilt = basis.iter().zip(&coords).fold(Element::zero(u.level()), |acc, (v, c)| &acc + &v.scale(c));
    if &rebuilt != u {
        return Err(Error::pre("element is not in H_epsilon"));
    }
    Ok([coords[0].clone(), coords[1].clone(), coords[2].clone(), coords[3].clone()])
}

/// Left `H_epsilon`-module action `u . alpha = alpha u`, extended linearly
/// from the basis: `r alpha + s alpha eps~ + q alpha eps + p alpha~`.
pub fn h_eps_dot(u: &Element, alpha: &Element) -> Result<Element> {
    let [r, s, q, p] = h_eps_coords(u)?;
    s3_act(alpha, &SphereParam { r, s, q, p })
}

/// Checks `u . (v . alpha) = (uv) . alpha`.
pub fn module_check(u: &Element, v: &Element, alpha: &Element) -> Result<Report> {
    let mut rep = Report::new("module", "left H_epsilon-module axiom");
    let lhs = h_eps_dot(u, &h_eps_dot(v, alpha)?)?;
    let rhs = h_eps_dot(&(u * v), alpha)?;
    let mut c = Check::new("u.(v.alpha) = (uv).alpha");
    c.record(lhs == rhs, || {
        Counterexample::new("module axiom fails").with("u", u).with("v", v).with("alpha", alpha).with("lhs", &lhs).with("rhs", &rhs)
    });
    rep.push(c);
    Ok(rep)
}

/// Same `S(H_epsilon)`-orbit: equal norms and equal 8-dimensional spans
/// `O_alpha = O_beta`.
pub fn orbit_equiv_o(alpha: &Element, beta: &Element) -> Result<bool> {
    if alpha.level() != beta.level() {
        return Err(Error::LevelMismatch { left: alpha.level(), right: beta.level() });
    }
    if alpha.norm_sq() != beta.norm_sq() {
        return Ok(false);
    }
    let oa = oct_basis(alpha)?;
    let ob = oct_basis(beta)?;
    let mut rows: Vec<Vec<Scalar>> = oa.elems.iter().map(|e| e.coeffs().to_vec()).collect();
    rows.extend(ob.elems.iter().map(|e| e.coeffs().to_vec()));
    Ok(rank(&rows) == 8)
}

/// Torus parameters reproducing `beta` from the pair `(a, b)`, if any:
/// `beta = (u a + v a~, t b + m b~)`.
pub fn torus_match(a: &Element, b: &Element, beta: &Element) -> Result<Option<TorusParam>> {
    let (b1, b2) = beta.split()?;
    let (at, bt) = (a.tilde()?, b.tilde()?);
    if rank_of(&[a, &at, &b1]) != rank_of(&[a, &at]) || rank_of(&[b, &bt, &b2]) != rank_of(&[b, &bt]) {
        return Ok(None);
    }
    // a, a~ orthogonal with equal norms; same for b
    let na = a.norm_sq();
    let nb = b.norm_sq();
    let u = &inner(&b1, a)? / &na;
    let v = &inner(&b1, &at)? / &na;
    let t = &inner(&b2, b)? / &nb;
    let m = &inner(&b2, &bt)? / &nb;
    match (CircleParam::new(u, v), CircleParam::new(t, m)) {
        (Ok(first), Ok(second)) => Ok(Some(TorusParam { first, second })),
        _ => Ok(None),
    }
}

/// The intersection of the sphere and torus actions: on seeded `W`
/// members, `g = (r, 0, q, 0)` must match the torus element
/// `((r, q), (r, -q))`, and any `g` with `s` or `p` nonzero must match no
/// torus element.
pub fn s3_cap_t_check(n: u32, seed: u64, samples: u64) -> Result<Report> {
    if n < 3 {
        return Err(Error::LevelTooLow { min: 3, got: n });
    }
    let mut rep = Report::new("s3-cap-t", "sphere and torus actions meet in a circle");
    let mut identity = Check::new("identity-matches");
    let mut circle = Check::new("s=p=0 matches ((r,q),(r,-q))");
    let mut off = Check::new("s or p nonzero has no torus match");
    for i in 0..samples {
        let mut rng = rng_for(seed, i);
        let (a, b) = sample::w_frame(&mut rng, n, 6);
        let alpha = Element::double(&a, &b)?;

        let id = s3_act(&alpha, &SphereParam::identity())?;
        let m = torus_match(&a, &b, &id)?;
        identity.record(m == Some(TorusParam::identity()), || Counterexample::new("identity").sample(i).with("alpha", &alpha));

        let (r, q) = sample::pythagorean(&mut rng);
        let g = SphereParam { r: r.clone(), s: Scalar::zero(), q: q.clone(), p: Scalar::zero() };
        let beta = s3_act(&alpha, &g)?;
        let want = TorusParam {
            first: CircleParam { r: r.clone(), s: q.clone() },
            second: CircleParam { r, s: -q },
        };
        let via_torus = t2_act(&want, &FramePair::new(a.clone(), b.clone())?)?.to_alpha();
        let found = torus_match(&a, &b, &beta)?;
        circle.record(found.as_ref() == Some(&want) && via_torus == beta, || {
            Counterexample::new("circle parameters").sample(i).with("alpha", &alpha).with("g", &g).with("found", &found)
        });

        let mut g = SphereParam::random(&mut rng);
        if g.s.is_zero() && g.p.is_zero() {
            // force a component off the circle
            g = SphereParam { r: Scalar::ratio(3, 5), s: Scalar::zero(), q: Scalar::zero(), p: Scalar::ratio(4, 5) };
        }
        let beta = s3_act(&alpha, &g)?;
        let found = torus_match(&a, &b, &beta)?;
        off.record(found.is_none(), || {
            Counterexample::new("unexpected torus match").sample(i).with("alpha", &alpha).with("g", &g).with("found", &found)
        });
    }
    rep.push(identity);
    rep.push(circle);
    rep.push(off);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::{in_v_doubly, in_w};

    fn e(level: u32, i: usize) -> Element {
        Element::basis(level, i).unwrap()
    }

    #[test]
    fn circle_identity_and_composition() {
        let mut rng = rng_for(1, 0);
        let (a, b) = sample::v_frame(&mut rng, 4, 5);
        let p = FramePair::new(a, b).unwrap();
        assert_eq!(s1_act(&CircleParam::identity(), &p, true).unwrap(), p);
        let g = CircleParam::random(&mut rng);
        let h = CircleParam::random(&mut rng);
        let lhs = s1_act(&g, &s1_act(&h, &p, true).unwrap(), true).unwrap();
        let rhs = s1_act(&g.compose(&h), &p, true).unwrap();
        assert_eq!(lhs, rhs);
        // r alpha + s alpha~
        let alpha = p.to_alpha();
        let direct = &alpha.scale(&g.r) + &alpha.tilde().unwrap().scale(&g.s);
        assert_eq!(s1_act(&g, &p, false).unwrap().to_alpha(), direct);
    }

    #[test]
    fn circle_rejects_non_members_when_checked() {
        let p = FramePair::new(e(3, 1), e(3, 1)).unwrap();
        assert!(s1_act(&CircleParam::identity(), &p, true).is_err());
        assert!(CircleParam::new(Scalar::one(), Scalar::one()).is_err());
    }

    #[test]
    fn torus_preserves_w_and_zero_products() {
        let mut rng = rng_for(2, 0);
        let (a, b) = sample::w_frame(&mut rng, 4, 6);
        let p = FramePair::new(a, b).unwrap();
        let g = TorusParam::random(&mut rng);
        assert!(in_w(&t2_act(&g, &p).unwrap()).unwrap());
        let z = FramePair::new(&e(4, 1) + &e(4, 10), &e(4, 4) - &e(4, 15)).unwrap();
        let img = t2_act(&g, &z).unwrap();
        assert!((&img.a * &img.b).is_zero());
        assert_eq!(t2_act(&TorusParam::identity(), &p).unwrap(), p);
    }

    #[test]
    fn sphere_action_examples() {
        let mut rng = rng_for(3, 0);
        let (a, b) = sample::w_frame(&mut rng, 4, 6);
        let alpha = Element::double(&a, &b).unwrap();
        assert_eq!(s3_act(&alpha, &SphereParam::identity()).unwrap(), alpha);
        let p_only = SphereParam::new(Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::one()).unwrap();
        assert_eq!(s3_act(&alpha, &p_only).unwrap(), Element::double(&-&b, &a).unwrap());
        let g = SphereParam::random(&mut rng);
        let beta = s3_act(&alpha, &g).unwrap();
        assert_eq!(beta, s3_act_coordinates(&alpha, &g).unwrap());
        assert_eq!(beta.norm_sq(), alpha.norm_sq());
        assert!(in_w(&FramePair::from_alpha(&beta).unwrap()).unwrap());
        assert!(in_v_doubly(&FramePair::from_alpha(&beta).unwrap()).unwrap());
        // right multiplication by the sphere element itself
        assert_eq!(beta, &alpha * &g.to_element(4).unwrap());
        assert!(s3_act(&e(5, 8), &g).is_err());
    }

    #[test]
    fn module_axiom_examples() {
        let mut rng = rng_for(4, 0);
        let (a, b) = sample::w_frame(&mut rng, 4, 6);
        let alpha = Element::double(&a, &b).unwrap();
        let [_, eps_t, eps, e0_t] = h_eps_basis(4).unwrap();
        assert!(module_check(&eps, &eps, &alpha).unwrap().passed);
        assert_eq!(h_eps_dot(&eps, &h_eps_dot(&eps, &alpha).unwrap()).unwrap(), -&alpha);
        let lhs = h_eps_dot(&eps, &h_eps_dot(&e0_t, &alpha).unwrap()).unwrap();
        assert_eq!(lhs, &alpha.tilde().unwrap() * &eps);
        assert_eq!(&eps * &e0_t, eps_t);
        assert!(module_check(&eps, &e0_t, &alpha).unwrap().passed);
        assert!(h_eps_coords(&e(5, 1)).is_err());
    }

    #[test]
    fn orbit_examples() {
        let mut rng = rng_for(5, 0);
        let (a, b) = sample::w_frame(&mut rng, 4, 6);
        let alpha = Element::double(&a, &b).unwrap();
        assert!(orbit_equiv_o(&alpha, &alpha).unwrap());
        let g = SphereParam::random(&mut rng);
        assert!(orbit_equiv_o(&alpha, &s3_act(&alpha, &g).unwrap()).unwrap());
        let (c, d) = sample::w_frame(&mut rng, 4, 6);
        let other = Element::double(&c, &d).unwrap();
        assert!(!orbit_equiv_o(&alpha, &other).unwrap());
    }

    #[test]
    fn sphere_torus_intersection() {
        let rep = s3_cap_t_check(4, 7, 5).unwrap();
        assert!(rep.passed, "{rep:#?}");
    }
}
