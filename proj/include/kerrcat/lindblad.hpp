#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kerrcat/fock.hpp"
#include "kerrcat/model.hpp"

namespace kerrcat {

enum class Direction { Loss, Gain };

// Order at which a channel's printed form enters the expansion.
enum class ChannelOrder { Zero, One, Two, Engineered };

enum class ModelOrder { Zero, One, OneTwoPhotonOnly, Two };

const char* to_string(Direction d);
const char* to_string(ChannelOrder o);
std::string order_name(ModelOrder o);          // "0", "1", "1tp", "2"
ModelOrder parse_order(const std::string& s);  // throws ConfigInvalid

struct ChannelLabel {
    BathLabel freq = BathLabel::Dc;
    Direction direction = Direction::Loss;
    ChannelOrder order = ChannelOrder::Zero;
};

std::string to_string(const ChannelLabel& label);

// One Lindblad channel: rate * D[jump].
struct DissipatorTerm {
    double rate = 0.0;  // 1/s
    OperatorExpr jump;
    ChannelLabel label;
};

struct LindbladModel {
    OperatorExpr hamiltonian;  // angular-frequency units, hbar absorbed
    std::vector<DissipatorTerm> dissipators;
    ModelOrder order = ModelOrder::Zero;
};

// Delta ad a - K ad^2 a^2 + eps2 (ad^2 + a^2)
OperatorExpr build_hamiltonian(const ModelParams& p);

// Ordinary Lindbladian: single photon loss and gain at omega_d/2.
std::vector<DissipatorTerm> dissipators_order0(const ModelParams& p, const BathSpectrum& b);

// Six channels at omega_d/2, omega_d, 3 omega_d/2 with composite jumps.
std::vector<DissipatorTerm> dissipators_order1(const ModelParams& p, const BathSpectrum& b);

// Plain single-photon pair plus the bare two-photon pair.
std::vector<DissipatorTerm> dissipators_order1_two_photon_only(const ModelParams& p,
                                                               const BathSpectrum& b);

// Full second-order channel list: composites at omega_d/2, omega_d,
// 3 omega_d/2, pure two-photon channels at 2 omega_d and 5 omega_d/2,
// plus the DC pair when its rate products are nonzero.
std::vector<DissipatorTerm> dissipators_order2(const ModelParams& p, const BathSpectrum& b);

// Channel builders on a generic complex drive amplitude; the public
// entry points above use the real convention Pi = eps2/g3. Exposed so the
// loss/gain conjugacy can be exercised off the real-Pi axis.
std::vector<DissipatorTerm> order1_channels(const ModelParams& p, const BathSpectrum& b,
                                            Complex pi);
std::vector<DissipatorTerm> order2_channels(const ModelParams& p, const BathSpectrum& b,
                                            Complex pi);

// kappa_2ph D[a^2 - alpha^2] (or bare D[a^2] when p.cooling_bare).
// Empty when kappa_2ph = 0.
std::optional<DissipatorTerm> engineered_cooling(const ModelParams& p);

LindbladModel build_model(const ModelParams& p, const BathSpectrum& b, ModelOrder order);

// Vectorized generator in the column-stacking convention
// vec(A X B) = (B^T kron A) vec(X):
//   L = -i (I kron H - H^T kron I)
//       + sum_k rate_k (conj(J) kron J - (I kron Jd J + (Jd J)^T kron I)/2)
struct Liouvillian {
    int dim = 0;
    Matrix mat;  // dim^2 x dim^2
    static constexpr const char* kStacking = "column";
};

inline constexpr double kDefaultMemoryBudgetBytes = 3.0e9;

Liouvillian assemble_liouvillian(const LindbladModel& m, int dim,
                                 double memory_budget_bytes = kDefaultMemoryBudgetBytes);

Matrix kron(const Matrix& a, const Matrix& b);

struct ChannelReportRow {
    ChannelLabel label;
    double rate = 0.0;            // 1/s
    std::string jump_text;
    double effective_rate = 0.0;  // rate * <alpha| Jd J |alpha>
};

// Per-channel effective decoherence strengths at the coherent state
// alpha = sqrt(alpha_sq), sorted descending.
std::vector<ChannelReportRow> channel_report(const LindbladModel& m, double alpha_sq);

std::string channel_report_csv(const std::vector<ChannelReportRow>& rows);

} // namespace kerrcat
