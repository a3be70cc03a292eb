#ifndef REGCOH_ROOT_DATUM_HPP
#define REGCOH_ROOT_DATUM_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "regcoh/rational.hpp"

namespace regcoh {

/// Raised when user-supplied data fails validation.  The message carries the
/// diagnostic shown by the CLI.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

enum class Series { A, B, C, D, F, G, A1xA1, Torus };

Series parse_series(const std::string& name);
std::string series_name(Series s);

/// Character-lattice choice: root lattice Q, weight lattice P, or explicit
/// generators given as rows in fundamental-weight coordinates.
struct AdjointLattice {};
struct SimplyConnectedLattice {};
using LatticeChoice =
    std::variant<AdjointLattice, SimplyConnectedLattice, std::vector<std::vector<Rat>>>;

enum class Lattice { Q, X, P };

/**
 * An element of the Weyl group as an exact linear map on weight space
 * (fundamental-weight coordinates).
 */
struct WeylElement {
  RatMatrix matrix;       // action on weight coordinates
  RatMatrix inverse;      // matrix of the inverse element
  int length = 0;
  std::vector<int> word;  // lex-least reduced word, 0-based generator indices
  std::uint32_t descents = 0;  // bit i set iff t^{-1}(alpha_i) < 0

  std::string name() const;  // "e" or digit string like "121" (1-based)
};

/**
 * Root datum of a semisimple type at desk-scale rank, or of a torus.
 *
 * Weights are stored in fundamental-weight coordinates, coweights in
 * fundamental-coweight coordinates, so the dominant chamber is the
 * nonnegative orthant and the wall alpha^perp is a coordinate hyperplane.
 * Column j of the Cartan matrix holds the coordinates of the simple root
 * alpha_j; entry (i,j) is <alpha_j, alpha_i^vee>.
 */
struct RootDatum {
  Series series = Series::Torus;
  int rank = 0;

  RatMatrix cartan;       // r x r (empty for the torus)
  RatMatrix cartan_inv;
  RatMatrix pairing;      // <x, n> = x^T * pairing * n  (C^{-T}; identity for torus)
  RatVector rho;          // all ones (zeros for the torus)

  std::vector<RatVector> positive_roots;    // fundamental-weight coordinates
  std::vector<RatVector> positive_coroots;  // fundamental-coweight coordinates

  RatMatrix lattice;         // columns generate X in fw coordinates
  RatMatrix coweight_to_Y;   // n in Y  iff  coweight_to_Y * n is integral

  std::vector<WeylElement> weyl;  // complete, identity first, by (length, word)

  bool is_torus() const { return series == Series::Torus; }
  std::size_t weyl_order() const { return weyl.size(); }
  const WeylElement& identity() const { return weyl.front(); }

  /// <x, n> for a weight x and a coweight n.
  Rat pair(const RatVector& x, const RatVector& n) const;
  /// Coordinates of a weight in the simple-root basis.
  RatVector root_coords(const RatVector& x) const;
  /// dim X for the regular compactifications of this datum: |Phi| + r.
  int dim_compactification() const {
    return 2 * static_cast<int>(positive_roots.size()) + rank;
  }
};

RootDatum build_root_datum(Series series, int rank, const LatticeChoice& lattice);
RootDatum torus_datum(int rank);

bool is_dominant(const RootDatum& rd, const RatVector& weight);
bool in_lattice(const RootDatum& rd, const RatVector& weight, Lattice which);

/// Weyl dimension of the simple module with dominant integral highest weight.
Int weyl_dimension(const RootDatum& rd, const RatVector& mu);

}  // namespace regcoh

#endif  // REGCOH_ROOT_DATUM_HPP
