//! Dataset representation and preprocessing: sliding-window segmentation,
//! min-max normalization, stratified train/validation splitting, and
//! ground-truth domain bookkeeping.

mod format;
mod synth;

pub use format::{load_dataset, save_dataset, DatasetFormat};
pub use synth::{generate_synthetic, SynthConfig};

use crate::error::{Error, Result};
use crate::rng::{permutation, stream, StreamTag};

/// An un-windowed multichannel time series with one class label.
#[derive(Debug, Clone, PartialEq)]
pub struct RawSeries {
    pub id: String,
    pub channels: usize,
    /// `channels x T`, row-major.
    pub samples: Vec<f64>,
    pub class_label: usize,
    /// Ground truth for diagnostics only; never visible to training.
    pub true_domain: Option<usize>,
}

impl RawSeries {
    pub fn len(&self) -> usize {
        self.samples.len() / self.channels
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn channel(&self, c: usize) -> &[f64] {
        let t = self.len();
        &self.samples[c * t..(c + 1) * t]
    }
}

/// One fixed-size window: `channels x 1 x window` values, a class label,
/// an optional true domain, and a mutable pseudo domain label.
#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    pub id: String,
    /// `channels x window`, row-major (the unit height axis is implicit).
    pub values: Vec<f64>,
    pub y: usize,
    pub true_domain: Option<usize>,
    /// Pseudo domain label in `[0, K)`; every segment starts at 0.
    pub pseudo_domain: usize,
}

/// An ordered collection of equally shaped segments.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentDataset {
    pub segments: Vec<Segment>,
    pub classes: usize,
    /// Configured latent-domain count; bounds `pseudo_domain`.
    pub k: usize,
    pub channels: usize,
    pub window: usize,
}

impl SegmentDataset {
    pub fn new(channels: usize, window: usize, classes: usize) -> Self {
        SegmentDataset { segments: Vec::new(), classes, k: 1, channels, window }
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn labels(&self) -> Vec<usize> {
        self.segments.iter().map(|s| s.y).collect()
    }

    pub fn pseudo_domains(&self) -> Vec<usize> {
        self.segments.iter().map(|s| s.pseudo_domain).collect()
    }

    pub fn true_domains(&self) -> Option<Vec<usize>> {
        self.segments.iter().map(|s| s.true_domain).collect()
    }

    /// Enforce the shape and label invariants; called by loaders.
    pub fn validate(&self) -> Result<()> {
        let n = self.channels * self.window;
        for (i, s) in self.segments.iter().enumerate() {
            if s.values.len() != n {
                return Err(Error::Data(format!(
                    "segment {i}: {} values, expected {n}",
                    s.values.len()
                )));
            }
            if s.y >= self.classes {
                return Err(Error::Data(format!(
                    "segment {i}: class {} out of range [0, {})",
                    s.y, self.classes
                )));
            }
            if s.pseudo_domain >= self.k {
                return Err(Error::Data(format!(
                    "segment {i}: pseudo domain {} out of range [0, {})",
                    s.pseudo_domain, self.k
                )));
            }
            if s.values.iter().any(|v| !v.is_finite()) {
                return Err(Error::Data(format!("segment {i}: non-finite value")));
            }
        }
        Ok(())
    }

    /// Sub-dataset of the given segment indices, in order.
    pub fn subset(&self, indices: &[usize]) -> SegmentDataset {
        SegmentDataset {
            segments: indices.iter().map(|&i| self.segments[i].clone()).collect(),
            classes: self.classes,
            k: self.k,
            channels: self.channels,
            window: self.window,
        }
    }

    /// Reset every pseudo domain label to 0 and set the configured K.
    pub fn reset_pseudo_domains(&mut self, k: usize) {
        self.k = k.max(1);
        for s in &mut self.segments {
            s.pseudo_domain = 0;
        }
    }
}

/// Slide a window of `window` samples with the given `step` over a series.
/// Segment `i` covers samples `[i*step, i*step + window)`; labels are
/// copied from the series.
pub fn segment(series: &RawSeries, window: usize, step: usize) -> Result<Vec<Segment>> {
    let t = series.len();
    if window == 0 || step == 0 {
        return Err(Error::Config("window and step must be >= 1".into()));
    }
    if window > t {
        return Err(Error::Data(format!(
            "window {window} longer than series '{}' of length {t}",
            series.id
        )));
    }
    let count = (t - window) / step + 1;
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let start = i * step;
        let mut values = Vec::with_capacity(series.channels * window);
        for c in 0..series.channels {
            values.extend_from_slice(&series.channel(c)[start..start + window]);
        }
        out.push(Segment {
            id: format!("{}:{}", series.id, i),
            values,
            y: series.class_label,
            true_domain: series.true_domain,
            pseudo_domain: 0,
        });
    }
    Ok(out)
}

/// Scope of the min-max extrema.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormScope {
    /// One (min, max) over all channels of the sample. Default.
    PerSample,
    /// Separate (min, max) per channel.
    PerChannel,
}

/// Map values to `[0, 1]` via `(x - min) / (max - min)`. A constant
/// extent (min == max) maps to all zeros rather than NaN.
pub fn minmax_normalize(values: &mut [f64], channels: usize, scope: NormScope) {
    let rescale = |chunk: &mut [f64]| {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in chunk.iter() {
            lo = lo.min(*v);
            hi = hi.max(*v);
        }
        let span = hi - lo;
        if span == 0.0 {
            chunk.fill(0.0);
        } else {
            for v in chunk.iter_mut() {
                *v = (*v - lo) / span;
            }
        }
    };
    match scope {
        NormScope::PerSample => rescale(values),
        NormScope::PerChannel => {
            let w = values.len() / channels;
            for c in 0..channels {
                rescale(&mut values[c * w..(c + 1) * w]);
            }
        }
    }
}

/// Normalize every segment in place.
pub fn normalize_dataset(ds: &mut SegmentDataset, scope: NormScope) {
    let channels = ds.channels;
    for s in &mut ds.segments {
        minmax_normalize(&mut s.values, channels, scope);
    }
}

/// Stratified-by-class split into (train, val). Deterministic in `seed`;
/// per-class counts deviate from the exact ratio by at most one.
pub fn split_train_val(
    ds: &SegmentDataset,
    ratio: f64,
    seed: u64,
) -> Result<(SegmentDataset, SegmentDataset)> {
    if !(ratio > 0.0 && ratio < 1.0) {
        return Err(Error::Config(format!("split ratio {ratio} must be in (0, 1)")));
    }
    let mut by_class: Vec<Vec<usize>> = vec![Vec::new(); ds.classes];
    for (i, s) in ds.segments.iter().enumerate() {
        by_class[s.y].push(i);
    }
    let mut train_idx = Vec::new();
    let mut val_idx = Vec::new();
    for (c, members) in by_class.iter().enumerate() {
        if members.is_empty() {
            continue;
        }
        if members.len() < 2 {
            return Err(Error::Data(format!(
                "class {c} has {} segment(s); need >= 2 to split",
                members.len()
            )));
        }
        let mut rng = stream(seed, StreamTag::Split, &[c as u64]);
        let perm = permutation(&mut rng, members.len());
        let n_train = ((ratio * members.len() as f64).round() as usize)
            .clamp(1, members.len() - 1);
        for (rank, &p) in perm.iter().enumerate() {
            if rank < n_train {
                train_idx.push(members[p]);
            } else {
                val_idx.push(members[p]);
            }
        }
    }
    train_idx.sort_unstable();
    val_idx.sort_unstable();
    Ok((ds.subset(&train_idx), ds.subset(&val_idx)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(t: usize) -> RawSeries {
        RawSeries {
            id: "s".into(),
            channels: 2,
            samples: (0..2 * t).map(|v| v as f64).collect(),
            class_label: 1,
            true_domain: Some(0),
        }
    }

    #[test]
    fn segmentation_counts_match_formula() {
        let segs = segment(&series(1000), 200, 100).unwrap();
        assert_eq!(segs.len(), 9);
        // 50% overlap: consecutive starts differ by half a window
        assert_eq!(segs[0].values[1], 1.0);
        let segs = segment(&series(200), 200, 100).unwrap();
        assert_eq!(segs.len(), 1);
        assert!(segment(&series(150), 200, 100).is_err());
    }

    #[test]
    fn segments_copy_labels_and_cover_expected_ranges() {
        let segs = segment(&series(10), 4, 3).unwrap();
        assert_eq!(segs.len(), 3);
        for (i, s) in segs.iter().enumerate() {
            assert_eq!(s.y, 1);
            assert_eq!(s.true_domain, Some(0));
            // channel 0 of the source is 0..10, so the window start leads
            assert_eq!(s.values[0], (i * 3) as f64);
        }
    }

    #[test]
    fn minmax_formula_and_endpoints() {
        let mut v = vec![0.0, 50.0, 200.0];
        minmax_normalize(&mut v, 1, NormScope::PerSample);
        assert_eq!(v, vec![0.0, 0.25, 1.0]);
    }

    #[test]
    fn minmax_constant_input_maps_to_zeros() {
        let mut v = vec![7.0; 6];
        minmax_normalize(&mut v, 2, NormScope::PerSample);
        assert_eq!(v, vec![0.0; 6]);
    }

    #[test]
    fn minmax_is_idempotent_once_extrema_are_unit() {
        let mut v = vec![0.3, 0.0, 1.0, 0.8];
        let before = v.clone();
        minmax_normalize(&mut v, 1, NormScope::PerSample);
        assert_eq!(v, before);
    }

    #[test]
    fn per_channel_scope_normalizes_channels_independently() {
        let mut v = vec![0.0, 1.0, 10.0, 30.0];
        minmax_normalize(&mut v, 2, NormScope::PerChannel);
        assert_eq!(v, vec![0.0, 1.0, 0.0, 1.0]);
    }

    fn toy_dataset(per_class: &[usize]) -> SegmentDataset {
        let mut ds = SegmentDataset::new(1, 2, per_class.len());
        for (y, &n) in per_class.iter().enumerate() {
            for i in 0..n {
                ds.segments.push(Segment {
                    id: format!("{y}-{i}"),
                    values: vec![0.0, 1.0],
                    y,
                    true_domain: None,
                    pseudo_domain: 0,
                });
            }
        }
        ds
    }

    #[test]
    fn split_is_stratified_and_deterministic() {
        let ds = toy_dataset(&[50, 30, 20]);
        let (tr, va) = split_train_val(&ds, 0.8, 9).unwrap();
        assert_eq!(tr.len(), 80);
        assert_eq!(va.len(), 20);
        for y in 0..3 {
            let t = tr.segments.iter().filter(|s| s.y == y).count();
            let v = va.segments.iter().filter(|s| s.y == y).count();
            let exact = 0.8 * (t + v) as f64;
            assert!((t as f64 - exact).abs() <= 1.0, "class {y}: {t}/{v}");
        }
        let (tr2, va2) = split_train_val(&ds, 0.8, 9).unwrap();
        assert_eq!(tr, tr2);
        assert_eq!(va, va2);
        // disjoint and exhaustive by id
        let mut ids: Vec<&str> = tr.segments.iter().chain(&va.segments).map(|s| s.id.as_str()).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 100);
    }

    #[test]
    fn split_single_class_of_ten_gives_eight_two() {
        let ds = toy_dataset(&[10]);
        let (tr, va) = split_train_val(&ds, 0.8, 1).unwrap();
        assert_eq!((tr.len(), va.len()), (8, 2));
    }

    #[test]
    fn split_rejects_undersized_class() {
        let ds = toy_dataset(&[5, 1]);
        assert!(split_train_val(&ds, 0.8, 1).is_err());
    }
}
