//! Pure numeric forms of the training losses, executable and checkable
//! without any neural model. Both losses use max-subtraction so scores
//! up to |700| stay finite.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum TrainingError {
    #[error("scores must be finite")]
    NonFinite,
    #[error("answer index {0} out of range 0..=3")]
    BadAnswerIndex(usize),
}

/// Per-option scores for one instance plus the gold answer index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoreVector {
    scores: [f64; 4],
    answer_index: usize,
}

impl ScoreVector {
    pub fn new(scores: [f64; 4], answer_index: usize) -> Result<Self, TrainingError> {
        if scores.iter().any(|s| !s.is_finite()) {
            return Err(TrainingError::NonFinite);
        }
        if answer_index > 3 {
            return Err(TrainingError::BadAnswerIndex(answer_index));
        }
        Ok(ScoreVector { scores, answer_index })
    }

    pub fn scores(&self) -> [f64; 4] {
        self.scores
    }

    pub fn answer_index(&self) -> usize {
        self.answer_index
    }
}

/// Cross-entropy over the four option scores:
/// `-log softmax(scores)[answer]`.
pub fn answer_loss(v: &ScoreVector) -> f64 {
    let max = v.scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let log_sum: f64 = v.scores.iter().map(|s| (s - max).exp()).sum::<f64>().ln();
    log_sum - (v.scores[v.answer_index] - max)
}

/// Binary contrastive loss preferring the positive context:
/// `-log(exp(s_pos) / (exp(s_pos) + exp(s_neg)))`, i.e.
/// `softplus(s_neg - s_pos)`.
pub fn contrastive_loss(s_pos: f64, s_neg: f64) -> Result<f64, TrainingError> {
    if !s_pos.is_finite() || !s_neg.is_finite() {
        return Err(TrainingError::NonFinite);
    }
    Ok(softplus(s_neg - s_pos))
}

fn softplus(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// Per-example combined objective: the two losses simply add.
pub fn combined_loss(answer: f64, contrastive: f64) -> f64 {
    answer + contrastive
}
