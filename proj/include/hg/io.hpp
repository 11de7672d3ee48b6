#ifndef HG_IO_HPP
#define HG_IO_HPP

#include <string>

#include <json.hpp>

#include "hg/complex.hpp"
#include "hg/measure_diag.hpp"
#include "hg/sg_harmonic.hpp"
#include "hg/spectrum.hpp"

namespace hg::io {

nlohmann::json rat_to_json(const Rat& q);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json kform_to_json(const KForm& f);

/// Parses a k-form against the given complex; throws std::invalid_argument
/// on any mismatch (wrong complex id, bad degree, out-of-range cells).
KForm kform_from_json(const nlohmann::json& j, const Complex& c);

nlohmann::json complex_to_json(const Complex& c);

/// CSV with columns degree, eigenvalue, label, multiplicity; eigenvalues are
/// grouped within the report tolerance.
std::string spectrum_csv(const SpectrumReport& rep);

/// CSV with columns omega, omega_prime, num, den (zero entries skipped).
std::string pairing_csv(const sg::PairingTable& table);

/// CSV with columns m, l1_diff_num, l1_diff_den, bound_num, bound_den, pass.
std::string singularity_csv(const measure::SingularityReport& rep);

/// CSV with columns n, mass, ratio.
std::string growth_csv(const measure::KusuokaGrowth& growth);

/// CSV with columns word, face, num, den.
std::string face_cycles_csv(const std::vector<std::pair<Word, std::array<Rat, 4>>>& rows);

void write_file(const std::string& path, const std::string& content);

} // namespace hg::io

#endif
