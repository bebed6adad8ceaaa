#ifndef PCNN_METRICS_HPP
#define PCNN_METRICS_HPP

#include <string>

#include "pcnn/image.hpp"

namespace pcnn {

/// The three quality terms and their sum, the combined fitness objective.
struct MetricReport {
  double en;       ///< Shannon entropy, bits
  double ag;       ///< average gradient
  double sf;       ///< spatial frequency
  double fitness;  ///< en + ag + sf
};

/// -sum p*log2(p) over a fixed 256-bin histogram of [0,1]; 0*log(0) = 0.
double shannon_entropy(const GrayImage& image);

/// Mean over interior pixels of sqrt((dx^2 + dy^2)/2) with forward
/// differences. Single-row/column images use the one available difference;
/// 1x1 is rejected.
double average_gradient(const GrayImage& image);

/// sqrt(RF^2 + CF^2) where RF/CF are the RMS of horizontal/vertical forward
/// differences. A single row or column contributes zero to the missing
/// direction; 1x1 is rejected.
double spatial_frequency(const GrayImage& image);

/// EN + AG + SF bundled into one report.
MetricReport fusion_fitness(const GrayImage& image);

/// Minimum-cross-entropy objective of a binary partition:
///   D = sum_{mask=1} s*ln(s/mu1) + sum_{mask=0} s*ln(s/mu0)
/// with mu1/mu0 the class mean intensities; an empty class contributes 0.
double cross_entropy(const GrayImage& image, const BinaryField& mask);

/// 10*log10(1/MSE) over [0,1] intensities; +infinity for identical images.
double psnr(const GrayImage& reference, const GrayImage& candidate);

/// Label-agnostic disagreement: min over label swap of the mismatched
/// fraction.
double misclassification_error(const BinaryField& predicted, const BinaryField& truth);

/// One CSV row "name,en,ag,sf,fitness" (no line terminator).
std::string to_csv_row(const std::string& name, const MetricReport& report);

}  // namespace pcnn

#endif  // PCNN_METRICS_HPP
