//! Error measures between a predicted and a true prevalence.
//!
//! KLD and RAE are computed on additively smoothed distributions so they stay
//! finite when a predicted prevalence is zero. The smoothing factor defaults
//! to `1 / (2 |Te|)` where `|Te|` is the size of the test set being scored.

use alloc::vec::Vec;

use crate::model::{Prevalence, Scale};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmoothingSource {
    /// `epsilon = 1 / (2 * test_size)`
    TestSizeHalf {
        test_size: usize,
    },
    Explicit,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothingConfig {
    epsilon: f64,
    source: SmoothingSource,
}

impl SmoothingConfig {
    pub fn from_test_size(test_size: usize) -> Result<Self> {
        if test_size == 0 {
            return Err(Error::InvalidSmoothing);
        }
        Ok(SmoothingConfig {
            epsilon: 1.0 / (2.0 * test_size as f64),
            source: SmoothingSource::TestSizeHalf { test_size },
        })
    }

    pub fn explicit(epsilon: f64) -> Result<Self> {
        if !(epsilon.is_finite() && epsilon > 0.0) {
            return Err(Error::InvalidSmoothing);
        }
        Ok(SmoothingConfig {
            epsilon,
            source: SmoothingSource::Explicit,
        })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn source(&self) -> SmoothingSource {
        self.source
    }
}

/// Scores of one predicted prevalence against the truth.
///
/// `rae` is filled for two-point scales and `emd` for five-point scales.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantScore {
    pub kld: f64,
    pub ae: f64,
    pub rae: Option<f64>,
    pub emd: Option<f64>,
}

/// `(p(c) + eps) / (1 + eps * |C|)` for every class.
pub fn smooth(p: &Prevalence, cfg: &SmoothingConfig) -> Prevalence {
    let eps = cfg.epsilon;
    let denom = 1.0 + eps * p.values().len() as f64;
    Prevalence::from_raw(
        p.scale(),
        p.values().iter().map(|v| (v + eps) / denom).collect(),
    )
}

fn same_scale(a: &Prevalence, b: &Prevalence) -> Result<()> {
    if a.scale() == b.scale() {
        Ok(())
    } else {
        Err(Error::ScaleMismatch)
    }
}

/// `sum_c p(c) ln(p(c) / p_hat(c))` over smoothed distributions.
pub fn kld(pred: &Prevalence, true_p: &Prevalence, cfg: &SmoothingConfig) -> Result<f64> {
    same_scale(pred, true_p)?;
    let p = smooth(true_p, cfg);
    let q = smooth(pred, cfg);
    let sum: f64 = p
        .values()
        .iter()
        .zip(q.values())
        .map(|(&p, &q)| p * libm::log(p / q))
        .sum();
    // rounding can leave a tiny negative residue when p == q
    Ok(sum.max(0.0))
}

/// Mean absolute difference of the class prevalences.
pub fn ae(pred: &Prevalence, true_p: &Prevalence) -> Result<f64> {
    same_scale(pred, true_p)?;
    let n = pred.values().len() as f64;
    Ok(pred
        .values()
        .iter()
        .zip(true_p.values())
        .map(|(a, b)| (a - b).abs())
        .sum::<f64>()
        / n)
}

/// Mean relative absolute difference, on smoothed distributions.
pub fn rae(pred: &Prevalence, true_p: &Prevalence, cfg: &SmoothingConfig) -> Result<f64> {
    same_scale(pred, true_p)?;
    let p = smooth(true_p, cfg);
    let q = smooth(pred, cfg);
    let n = p.values().len() as f64;
    Ok(p.values()
        .iter()
        .zip(q.values())
        .map(|(&p, &q)| (q - p).abs() / p)
        .sum::<f64>()
        / n)
}

/// Earth Mover's Distance with unit distance between adjacent classes: the
/// L1 distance between the two cumulative distributions.
pub fn emd(pred: &Prevalence, true_p: &Prevalence) -> Result<f64> {
    same_scale(pred, true_p)?;
    if pred.scale() != Scale::FivePoint {
        return Err(Error::UnsupportedScale);
    }
    let k = pred.values().len();
    let mut cum_pred = 0.0;
    let mut cum_true = 0.0;
    let mut dist = 0.0;
    for (a, b) in pred.values()[..k - 1].iter().zip(&true_p.values()[..k - 1]) {
        cum_pred += a;
        cum_true += b;
        dist += (cum_pred - cum_true).abs();
    }
    Ok(dist)
}

/// Every measure that applies to the scale.
pub fn score(pred: &Prevalence, true_p: &Prevalence, cfg: &SmoothingConfig) -> Result<QuantScore> {
    let scale = true_p.scale();
    Ok(QuantScore {
        kld: kld(pred, true_p, cfg)?,
        ae: ae(pred, true_p)?,
        rae: match scale {
            Scale::TwoPoint => Some(rae(pred, true_p, cfg)?),
            _ => None,
        },
        emd: match scale {
            Scale::FivePoint => Some(emd(pred, true_p)?),
            _ => None,
        },
    })
}

/// Size-weighted mixture of per-topic prevalences.
pub(crate) fn mixture(parts: &[(&Prevalence, usize)]) -> Result<Prevalence> {
    let Some((first, _)) = parts.first() else {
        return Err(Error::EmptyInput);
    };
    let scale = first.scale();
    let total: usize = parts.iter().map(|(_, n)| n).sum();
    if total == 0 {
        return Err(Error::EmptyInput);
    }
    let mut acc: Vec<f64> = alloc::vec![0.0; scale.class_count()];
    for (p, n) in parts {
        if p.scale() != scale {
            return Err(Error::ScaleMismatch);
        }
        for (a, v) in acc.iter_mut().zip(p.values()) {
            *a += v * *n as f64;
        }
    }
    let sum: f64 = acc.iter().sum();
    Ok(Prevalence::from_raw(
        scale,
        acc.into_iter().map(|v| v / sum).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn two(p: f64) -> Prevalence {
        Prevalence::new(Scale::TwoPoint, vec![p, 1.0 - p]).unwrap()
    }

    fn five(v: [f64; 5]) -> Prevalence {
        Prevalence::new(Scale::FivePoint, v.to_vec()).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn smoothing_config() {
        assert_eq!(
            SmoothingConfig::from_test_size(100).unwrap().epsilon(),
            0.005
        );
        assert!(SmoothingConfig::from_test_size(0).is_err());
        assert!(SmoothingConfig::explicit(0.0).is_err());
        assert!(SmoothingConfig::explicit(-1.0).is_err());
        assert!(SmoothingConfig::explicit(f64::INFINITY).is_err());
    }

    #[test]
    fn smooth_examples() {
        let cfg = SmoothingConfig::explicit(0.005).unwrap();
        for eps in [0.001, 0.3] {
            let c = SmoothingConfig::explicit(eps).unwrap();
            assert_eq!(smooth(&two(0.5), &c).values(), &[0.5, 0.5]);
        }
        let s = smooth(&two(1.0), &cfg);
        assert!(close(s.values()[0], 0.9950495049504949, 1e-15));
        assert!(close(s.values()[1], 0.0049504950495049506, 1e-15));
        let s = smooth(&two(0.25), &cfg);
        assert!(close(s.values()[0], 0.2524752475247525, 1e-15));
        assert!(close(s.values()[1], 0.7475247524752475, 1e-15));
    }

    #[test]
    fn kld_examples() {
        let cfg = SmoothingConfig::from_test_size(100).unwrap();
        assert_eq!(kld(&two(0.3), &two(0.3), &cfg).unwrap(), 0.0);
        // oracle value computed independently in double precision
        let v = kld(&two(0.25), &two(0.5), &cfg).unwrap();
        assert!(close(v, 0.1405677820716344, 1e-12), "{v}");
        let v = kld(&two(0.0), &two(1.0), &cfg).unwrap();
        assert!(v.is_finite() && v > 0.0);
        assert!(close(v, 5.250796938672352, 1e-12), "{v}");
    }

    #[test]
    fn ae_examples() {
        assert_eq!(ae(&two(0.4), &two(0.4)).unwrap(), 0.0);
        assert_eq!(ae(&two(0.25), &two(0.5)).unwrap(), 0.25);
        assert_eq!(ae(&two(0.0), &two(1.0)).unwrap(), 1.0);
    }

    #[test]
    fn rae_examples() {
        let cfg = SmoothingConfig::explicit(0.005).unwrap();
        assert_eq!(rae(&two(0.7), &two(0.7), &cfg).unwrap(), 0.0);
        let v = rae(&two(0.25), &two(0.5), &cfg).unwrap();
        assert!(close(v, 0.49504950495049505, 1e-12), "{v}");
        let v = rae(&two(0.5), &two(1.0), &cfg).unwrap();
        assert!(close(v, 50.24875621890547, 1e-10), "{v}");
    }

    #[test]
    fn emd_examples() {
        let p = five([0.1, 0.2, 0.4, 0.2, 0.1]);
        assert_eq!(emd(&p, &p).unwrap(), 0.0);
        let lo = Prevalence::point_mass(Scale::FivePoint, -2).unwrap();
        let hi = Prevalence::point_mass(Scale::FivePoint, 2).unwrap();
        assert_eq!(emd(&lo, &hi).unwrap(), 4.0);
        let q = five([0.0, 0.3, 0.4, 0.3, 0.0]);
        assert!(close(emd(&q, &p).unwrap(), 0.2, 1e-12));
    }

    #[test]
    fn scale_errors() {
        let cfg = SmoothingConfig::explicit(0.01).unwrap();
        let p3 = Prevalence::new(Scale::ThreePoint, vec![0.2, 0.3, 0.5]).unwrap();
        assert_eq!(kld(&two(0.5), &p3, &cfg), Err(Error::ScaleMismatch));
        assert_eq!(ae(&two(0.5), &p3), Err(Error::ScaleMismatch));
        assert_eq!(rae(&two(0.5), &p3, &cfg), Err(Error::ScaleMismatch));
        assert_eq!(emd(&two(0.5), &p3), Err(Error::ScaleMismatch));
        assert_eq!(emd(&two(0.5), &two(0.1)), Err(Error::UnsupportedScale));
    }

    #[test]
    fn score_fills_scale_specific_fields() {
        let cfg = SmoothingConfig::explicit(0.01).unwrap();
        let s = score(&two(0.2), &two(0.6), &cfg).unwrap();
        assert!(s.rae.is_some() && s.emd.is_none());
        let p = five([0.2; 5]);
        let s = score(&p, &p, &cfg).unwrap();
        assert_eq!(s.emd, Some(0.0));
        assert!(s.rae.is_none());
    }

    #[test]
    fn mixture_weights_by_size() {
        let m = mixture(&[(&two(1.0), 10), (&two(0.0), 90)]).unwrap();
        assert!(close(m.values()[0], 0.1, 1e-15));
    }
}
