#pragma once

#include <cstdint>

namespace endtangle {

// Resource knobs shared by all analyses. Defaults are tuned so every
// built-in family finishes in seconds.
struct Budgets {
  int window = 20;        // truncation level for separations and flow
  int inner_level = 6;    // max level of enumerated separators / searches
  int patience = 3;       // plateau length required before stabilization
  long budget = 100000;   // cap on expanded truncation vertices
  int margin = 2;         // levels a cut must clear the window by
  int threshold = 8;      // witness count for infinite-domination verdicts
  int search_level = 6;   // max level scanned for dominating vertices
  int d_max = 8;          // deepest ball radius in the degree scan
  int z_samples = 4;      // Z-sample count in limit-point evidence
  int divergence_bound = 6;  // degree values above this with strict growth
                             // are reported as infinite
  unsigned seed = 1;      // random finite-graph oracle only
};

}  // namespace endtangle
