#include "bellab/realism.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <thread>

#include "bellab/kernels.hpp"
#include "bellab/quantum.hpp"
#include "bellab/rng.hpp"

namespace bellab::realism {

std::string_view to_string(ModelKind k) noexcept {
  switch (k) {
    case ModelKind::LhvSign:
      return "lhv-sign";
    case ModelKind::CollapseSequential:
      return "collapse-sequential";
    case ModelKind::FileReplay:
      return "replay";
  }
  return "?";
}

HiddenVariable draw_hidden_variable(std::uint64_t seed, std::uint64_t pair_index) {
  return {kTwoPi * rng::uniform(seed, rng::Stream::HiddenVariable, pair_index)};
}

Outcome lhv_outcome(HiddenVariable lambda, Angle theta, Side side) {
  const int s = std::cos(lambda.lambda - theta.radians()) >= 0.0 ? 1 : -1;
  return Outcome(side == Side::Alice ? s : -s);
}

const OutcomeSequence& AssignmentBlock::at(AxisSymbol s) const {
  auto it = sequences.find(s);
  if (it == sequences.end()) throw ModelError("block has no sequence for axis " + std::string(to_string(s)));
  return it->second;
}

void CounterfactualModel::validate(const Block& block) const {
  for (AxisSymbol s : block.axes.symbols())
    if (!supports(s))
      throw ModelError(std::string(to_string(kind())) + " does not define axis " + std::string(to_string(s)));
}

AssignmentBlock CounterfactualModel::generate_block(const Block& block, std::uint64_t seed,
                                                    const GenerateOptions& options) const {
  if (block.count == 0) throw DomainError("block count must be positive");
  const auto symbols = block.axes.symbols();
  if (symbols.empty()) throw DomainError("block has no configured axes");
  validate(block);

  Columns columns;
  for (AxisSymbol s : symbols) columns[s].assign(block.count, 0);

  const unsigned threads = parallel_safe() ? std::max(1u, options.threads) : 1u;
  if (threads == 1 || block.count < 4096) {
    assign(block, seed, 0, block.count, columns);
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (block.count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(block.count, begin + chunk);
      if (begin >= end) break;
      workers.emplace_back([&, begin, end] { assign(block, seed, begin, end, columns); });
    }
  }

  AssignmentBlock out{block, {}};
  for (auto& [s, values] : columns) {
    const Provenance prov = options.measured.contains(s) ? Provenance::Measured : Provenance::Counterfactual;
    out.sequences.emplace(s, OutcomeSequence(block.axes.axis(s), std::move(values), prov));
  }
  return out;
}

void LhvSignModel::assign(const Block& block, std::uint64_t seed, std::size_t begin, std::size_t end,
                          Columns& columns) const {
  const std::size_t n = end - begin;
  std::vector<double> cos_l(n), sin_l(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda = draw_hidden_variable(seed, block.first_pair + begin + i).lambda;
    cos_l[i] = std::cos(lambda);
    sin_l[i] = std::sin(lambda);
  }
  for (auto& [s, values] : columns) {
    const double theta = block.axes.at(s).radians();
    const std::int8_t sign = side_of(s) == Side::Alice ? 1 : -1;
    kernels::lhv_signs(cos_l, sin_l, std::cos(theta), std::sin(theta), sign,
                       std::span<std::int8_t>(values).subspan(begin, n));
  }
}

void CollapseSequentialModel::validate(const Block& block) const {
  CounterfactualModel::validate(block);
  if (!block.axes.has(AxisSymbol::P)) throw ModelError("collapse-sequential needs the P axis configured");
}

void CollapseSequentialModel::assign(const Block& block, std::uint64_t seed, std::size_t begin, std::size_t end,
                                     Columns& columns) const {
  const std::size_t n = end - begin;
  const Angle theta_p = block.axes.at(AxisSymbol::P);

  std::vector<std::int8_t> p(n), partner(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = static_cast<std::int8_t>(rng::fair_sign(seed, rng::Stream::SourceSign, block.first_pair + begin + i));
    partner[i] = static_cast<std::int8_t>(-p[i]);  // collapse(P_i, theta_P).sign
  }
  std::copy(p.begin(), p.end(), columns.at(AxisSymbol::P).begin() + static_cast<std::ptrdiff_t>(begin));

  std::vector<double> u(n);
  auto draw_side = [&](AxisSymbol s, rng::Stream stream) {
    auto it = columns.find(s);
    if (it == columns.end()) return;
    for (std::size_t i = 0; i < n; ++i) u[i] = rng::uniform(seed, stream, block.first_pair + begin + i);
    auto values = quantum::sample_prepared_batch(partner, theta_p, block.axes.at(s), u);
    std::copy(values.begin(), values.end(), it->second.begin() + static_cast<std::ptrdiff_t>(begin));
  };
  draw_side(AxisSymbol::E, rng::Stream::PreparedE);
  draw_side(AxisSymbol::EPrime, rng::Stream::PreparedEPrime);
}

void FileReplayModel::validate(const Block& block) const {
  CounterfactualModel::validate(block);
  for (AxisSymbol s : block.axes.symbols()) {
    const double d = (block.axes.at(s) - data_.axes.at(s)).radians();
    if (std::abs(d) > 1e-9)
      throw ModelError("replay file declares axis " + std::string(to_string(s)) + " at a different angle");
  }
  if (block.first_pair + block.count > data_.pairs()) throw ModelError("replay file has too few pairs for block");
}

void FileReplayModel::assign(const Block& block, std::uint64_t, std::size_t begin, std::size_t end,
                             Columns& columns) const {
  for (std::size_t k = 0; k < data_.order.size(); ++k) {
    auto it = columns.find(data_.order[k]);
    if (it == columns.end()) continue;
    const auto& src = data_.columns[k];
    const auto first = static_cast<std::ptrdiff_t>(block.first_pair + begin);
    std::copy(src.begin() + first, src.begin() + first + static_cast<std::ptrdiff_t>(end - begin),
              it->second.begin() + static_cast<std::ptrdiff_t>(begin));
  }
}

std::unique_ptr<CounterfactualModel> make_model(std::string_view spec) {
  if (spec == "lhv-sign") return std::make_unique<LhvSignModel>();
  if (spec == "collapse-sequential") return std::make_unique<CollapseSequentialModel>();
  constexpr std::string_view kReplay = "replay:";
  if (spec.starts_with(kReplay))
    return std::make_unique<FileReplayModel>(load_replay(std::string(spec.substr(kReplay.size()))));
  throw ConfigError("unknown model: " + std::string(spec));
}

}  // namespace bellab::realism
