//! Parameter points: seeded rational assignments to every free parameter.
//!
//! The primitive inputs are t and u with q = t² and q^ν = u, so half-integer
//! powers of q and arbitrary integer powers of q^ν are exact rationals:
//! q^{h/2 + mν} = t^h u^m. All identity verification happens at such points;
//! the identities are polynomial in the parameters, so exact equality at a
//! few independently seeded points is decisive.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::qcore::rat::Rat;

/// Default degree cap for polynomial-family checks and screening.
pub const DEFAULT_N_MAX: u32 = 10;

const MAX_REDRAWS: u32 = 64;

/// Parameter specialization profiles.
///
/// `Little` zeroes μ0, c0, c̄1 and sets 𝔠 = 0; `Big` zeroes μ0, c0. Both
/// derive the remaining W-scalars from (𝔞, 𝔟, 𝔠) so that the operator G1
/// acts on the corresponding polynomial family. `Equitable` draws like
/// `General`; it exists so reports can label the suite that exercised the
/// equitable scalars a, b, c.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Profile {
    General,
    Little,
    Big,
    Equitable,
}

impl Profile {
    pub fn name(self) -> &'static str {
        match self {
            Profile::General => "general",
            Profile::Little => "little",
            Profile::Big => "big",
            Profile::Equitable => "equitable",
        }
    }
}

/// A full rational assignment: t, u, the eight W-scalars, the equitable
/// scalars a, b, c, and the polynomial parameters 𝔞, 𝔟, 𝔠 (fields pa, pb, pc).
#[derive(Clone, PartialEq, Debug)]
pub struct ParamPoint {
    pub t: Rat,
    pub u: Rat,
    pub c0: Rat,
    pub cb0: Rat,
    pub c1: Rat,
    pub cb1: Rat,
    pub eps0: Rat,
    pub eps1: Rat,
    pub mu0: Rat,
    pub mu1: Rat,
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub pa: Rat,
    pub pb: Rat,
    pub pc: Rat,
    pub profile: Profile,
}

impl ParamPoint {
    pub fn q(&self) -> Rat {
        self.t.pow(2)
    }

    /// q^{h/2 + mν} = t^h u^m.
    pub fn qq(&self, h: i64, m: i64) -> Rat {
        self.t.pow(h) * self.u.pow(m)
    }

    /// q - q⁻¹.
    pub fn dq(&self) -> Rat {
        let q = self.q();
        &q - &q.inv()
    }

    /// Canonical serialization; the report digest hashes exactly this string.
    pub fn canonical_string(&self) -> String {
        format!(
            "profile={};t={};u={};c0={};cb0={};c1={};cb1={};eps0={};eps1={};mu0={};mu1={};a={};b={};c={};pa={};pb={};pc={}",
            self.profile.name(),
            self.t,
            self.u,
            self.c0,
            self.cb0,
            self.c1,
            self.cb1,
            self.eps0,
            self.eps1,
            self.mu0,
            self.mu1,
            self.a,
            self.b,
            self.c,
            self.pa,
            self.pb,
            self.pc,
        )
    }
}

fn rat_in(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rat {
    let span = (hi - lo + 1) as u64;
    let n = lo + (rng.next_u64() % span) as i64;
    let d = lo + (rng.next_u64() % span) as i64;
    let r = Rat::new(n, d);
    if rng.next_u64() & 1 == 1 {
        -r
    } else {
        r
    }
}

fn rnd(rng: &mut ChaCha8Rng) -> Rat {
    rat_in(rng, 1, 9)
}

struct Base {
    t: Rat,
    u: Rat,
    a: Rat,
    b: Rat,
    c: Rat,
}

fn draw_base(rng: &mut ChaCha8Rng) -> Base {
    let t = loop {
        let t = rat_in(rng, 2, 9);
        if !t.abs().is_one() {
            break t;
        }
    };
    let u = rat_in(rng, 2, 9);
    let a = rnd(rng);
    let b = rnd(rng);
    let c = rnd(rng);
    Base { t, u, a, b, c }
}

fn zero_scaffold(base: Base, profile: Profile) -> ParamPoint {
    ParamPoint {
        t: base.t,
        u: base.u,
        c0: Rat::zero(),
        cb0: Rat::zero(),
        c1: Rat::zero(),
        cb1: Rat::zero(),
        eps0: Rat::zero(),
        eps1: Rat::zero(),
        mu0: Rat::zero(),
        mu1: Rat::zero(),
        a: base.a,
        b: base.b,
        c: base.c,
        pa: Rat::zero(),
        pb: Rat::zero(),
        pc: Rat::zero(),
        profile,
    }
}

fn draw_general(rng: &mut ChaCha8Rng, profile: Profile) -> ParamPoint {
    let mut p = zero_scaffold(draw_base(rng), profile);
    p.c0 = rnd(rng);
    p.cb0 = rnd(rng);
    p.c1 = rnd(rng);
    p.cb1 = rnd(rng);
    p.eps0 = rnd(rng);
    p.eps1 = rnd(rng);
    p.mu0 = rnd(rng);
    p.mu1 = rnd(rng);
    p.pa = rnd(rng);
    p.pb = rnd(rng);
    p.pc = rnd(rng);
    p
}

#[derive(Clone, Copy)]
enum LittleA {
    Draw,
    /// Pin 𝔞 = q²; the admissible class for the big-from-little lift.
    QSquared,
}

/// Little profile: μ0 = c0 = c̄1 = 0, 𝔠 = 0. Free draws are 𝔞, 𝔟 and the
/// gauges c̄0, c1; the remaining W-scalars are derived so that the parameter
/// dictionary returns exactly (𝔞, 𝔟):
///   ε0 = -𝔟 c̄0 u q² / (q-q⁻¹)
///   μ1 = 𝔞 c1 u³ q (q+q⁻¹) / (q-q⁻¹)
///   ε1 = -c1 u / (q-q⁻¹)
fn draw_little(rng: &mut ChaCha8Rng, pa_mode: LittleA) -> ParamPoint {
    let mut p = zero_scaffold(draw_base(rng), Profile::Little);
    let q = p.q();
    let dq = p.dq();
    let u = p.u.clone();
    p.pa = match pa_mode {
        LittleA::Draw => rnd(rng),
        LittleA::QSquared => q.pow(2),
    };
    p.pb = rnd(rng);
    p.cb0 = rnd(rng);
    p.c1 = rnd(rng);
    p.eps0 = -(&p.pb * &p.cb0) * &u * q.pow(2) / &dq;
    p.mu1 = &p.pa * &p.c1 * u.pow(3) * &q * (&q + q.inv()) / &dq;
    p.eps1 = -(&p.c1 * &u) / &dq;
    p
}

/// Big profile: μ0 = c0 = 0. Free draws are 𝔞, 𝔟, 𝔠 (with 𝔟 + 𝔠 ≠ 0, else
/// the parameter dictionary is genuinely ambiguous) and the gauges c̄0, c1.
/// With `rescaled` the derived scalars match the dictionary for the
/// polynomial in the rescaled variable q²𝔟z; otherwise for the plain one.
fn draw_big(rng: &mut ChaCha8Rng, rescaled: bool) -> ParamPoint {
    let mut p = zero_scaffold(draw_base(rng), Profile::Big);
    let q = p.q();
    let dq = p.dq();
    let u = p.u.clone();
    p.pa = rnd(rng);
    p.pb = rnd(rng);
    p.pc = rnd(rng);
    while (&p.pb + &p.pc).is_zero() {
        p.pc = rnd(rng);
    }
    p.cb0 = rnd(rng);
    p.c1 = rnd(rng);
    if rescaled {
        p.eps0 = -(&p.cb0 * &p.pb) * &u * q.pow(2) / &dq;
        p.mu1 = &p.c1 * &p.pa * u.pow(3) * &q * (&q + q.inv()) / &dq;
        p.cb1 = -(&p.c1 * u.pow(2)) * &p.pa * &p.pc / p.pb.pow(2);
        p.eps1 = -(&p.c1 * &u) * (&p.pa + &p.pc) / (&p.pb * &dq);
    } else {
        p.eps0 = -(&p.cb0 * &u) / &dq;
        p.mu1 = &p.c1 * &p.pa * &p.pb * u.pow(3) * q.pow(3) * (&q + q.inv()) / &dq;
        p.cb1 = -(&p.c1 * &p.pa * &p.pc) * u.pow(2) * q.pow(4);
        p.eps1 = -(&p.c1 * (&p.pa + &p.pc)) * &u * q.pow(2) / &dq;
    }
    p
}

/// True iff no denominator of any implemented coefficient formula vanishes
/// at `p` and the reducibility guards hold for degrees up to `n_max`.
pub fn screen_degeneracies(p: &ParamPoint, n_max: u32) -> bool {
    if p.t.is_zero() || p.t.abs().is_one() || p.u.is_zero() {
        return false;
    }
    let q = p.q();
    // u² = q^m for some |m| <= 2 n_max makes the module reducible.
    let u2 = p.u.pow(2);
    let mut qm = Rat::one();
    if u2 == qm {
        return false;
    }
    for _ in 1..=2 * n_max {
        qm = qm * &q;
        if u2 == qm || u2 == qm.inv() {
            return false;
        }
    }
    if p.a.is_zero() || p.b.is_zero() || p.c.is_zero() {
        return false;
    }
    if matches!(p.profile, Profile::Little | Profile::Big) {
        if p.cb0.is_zero() || p.c1.is_zero() {
            return false;
        }
        // Pochhammer denominators (q²x; q²)_s, s <= n_max, must not vanish.
        let q2i = q.pow(-2);
        for x in [&p.pa, &p.pb, &p.pc] {
            if x.is_zero() {
                continue;
            }
            let mut qk = Rat::one();
            for _ in 1..=n_max {
                qk = qk * &q2i;
                if *x == qk {
                    return false;
                }
            }
        }
        let g = crate::uqsl2::g_coeffs(p);
        if g.g5.is_zero() {
            return false;
        }
        match p.profile {
            Profile::Big => {
                // 𝔟 + 𝔠 = 0 leaves two exact preimages of the g-ratios.
                if (&p.pb + &p.pc).is_zero() {
                    return false;
                }
            }
            Profile::Little => {
                if g.g2.is_zero() || g.g3.is_zero() {
                    return false;
                }
                // denominator of the z⁻¹-tridiagonalization coefficients
                let s = q.pow(3) * &u2;
                if (&g.g4 / &s - &s * &g.g5).is_zero() {
                    return false;
                }
            }
            _ => unreachable!(),
        }
    }
    true
}

fn draw(rng: &mut ChaCha8Rng, profile: Profile) -> ParamPoint {
    match profile {
        Profile::General | Profile::Equitable => draw_general(rng, profile),
        Profile::Little => draw_little(rng, LittleA::Draw),
        Profile::Big => draw_big(rng, true),
    }
}

fn sample_loop(
    seed: u64,
    n_max: u32,
    mut draw_one: impl FnMut(&mut ChaCha8Rng) -> ParamPoint,
) -> ParamPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_REDRAWS {
        let p = draw_one(&mut rng);
        if screen_degeneracies(&p, n_max) {
            return p;
        }
    }
    panic!("parameter screen rejected {MAX_REDRAWS} consecutive draws for seed {seed}");
}

/// Deterministic seeded point with the default degree cap.
pub fn sample_point(seed: u64, profile: Profile) -> ParamPoint {
    sample_point_with(seed, profile, DEFAULT_N_MAX)
}

/// Deterministic seeded point, screened for checks up to degree `n_max`.
pub fn sample_point_with(seed: u64, profile: Profile, n_max: u32) -> ParamPoint {
    sample_loop(seed, n_max, |rng| draw(rng, profile))
}

/// Big-profile point whose derived scalars match the plain (unrescaled)
/// polynomial dictionary.
pub fn sample_big_plain(seed: u64, n_max: u32) -> ParamPoint {
    sample_loop(seed, n_max, |rng| draw_big(rng, false))
}

/// Little-profile point with 𝔞 pinned to q²: exactly the points whose
/// reduced operator admits the z⁻¹ tridiagonal lift to a big operator.
pub fn sample_tridiag_little(seed: u64, n_max: u32) -> ParamPoint {
    sample_loop(seed, n_max, |rng| draw_little(rng, LittleA::QSquared))
}

/// Auxiliary nonzero rational draws (used for free coefficients in checks),
/// on a stream decoupled from the point draws.
pub fn aux_rats(seed: u64, count: usize) -> Vec<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(1000));
    (0..count).map(|_| rnd(&mut rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinism() {
        for profile in [
            Profile::General,
            Profile::Little,
            Profile::Big,
            Profile::Equitable,
        ] {
            assert_eq!(sample_point(7, profile), sample_point(7, profile));
        }
        assert_ne!(
            sample_point(7, Profile::General),
            sample_point(8, Profile::General)
        );
    }

    #[test]
    fn general_profile_nonzero_scalars() {
        let p = sample_point(7, Profile::General);
        for s in [
            &p.c0, &p.cb0, &p.c1, &p.cb1, &p.eps0, &p.eps1, &p.mu0, &p.mu1,
        ] {
            assert!(!s.is_zero());
        }
    }

    #[test]
    fn little_profile_zeros() {
        let p = sample_point(7, Profile::Little);
        assert!(p.mu0.is_zero() && p.c0.is_zero() && p.cb1.is_zero());
        assert!(p.pc.is_zero());
        assert!(!p.cb0.is_zero() && !p.c1.is_zero());
    }

    #[test]
    fn big_profile_zeros() {
        let p = sample_point(7, Profile::Big);
        assert!(p.mu0.is_zero() && p.c0.is_zero());
        assert!(!p.cb1.is_zero());
        assert!(!(&p.pb + &p.pc).is_zero());
    }

    #[test]
    fn screen_rejects_roots_of_unity() {
        let mut p = sample_point(1, Profile::General);
        p.t = Rat::one();
        assert!(!screen_degeneracies(&p, 10));
        p.t = Rat::from_int(-1);
        assert!(!screen_degeneracies(&p, 10));
    }

    #[test]
    fn screen_rejects_reducible_u() {
        let mut p = sample_point(1, Profile::General);
        // u² = q: reducible module
        let q = p.q();
        if let Some(root) = q.sqrt_exact() {
            p.u = root;
        } else {
            p.t = Rat::new(9, 4);
            p.u = Rat::new(3, 2);
        }
        assert!(!screen_degeneracies(&p, 10));
    }

    #[test]
    fn screened_points_pass_screen() {
        for seed in 1..=5 {
            assert!(screen_degeneracies(
                &sample_point(seed, Profile::Little),
                10
            ));
            assert!(screen_degeneracies(&sample_point(seed, Profile::Big), 10));
            assert!(screen_degeneracies(&sample_big_plain(seed, 10), 10));
        }
    }

    #[test]
    fn tridiag_little_pins_a() {
        let p = sample_tridiag_little(3, 10);
        assert_eq!(p.pa, p.q().pow(2));
    }

    #[test]
    fn qq_is_primitive_power() {
        let p = sample_point(2, Profile::General);
        assert_eq!(p.qq(2, 0), p.q());
        assert_eq!(p.qq(0, 1), p.u);
        assert_eq!(p.qq(-2, 3), p.q().inv() * p.u.pow(3));
    }

    #[test]
    fn canonical_string_shape() {
        let p = sample_point(1, Profile::Little);
        let s = p.canonical_string();
        assert!(s.starts_with("profile=little;t="));
        assert!(s.contains(";mu0=0;"));
    }
}
