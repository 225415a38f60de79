#pragma once

// Counterfactual models: rules that give every emitted pair a full ±1 tuple
// over all configured axes, so sequences for unmeasured axes exist and can
// be correlated. A single tuple per pair means a value on a measured axis is
// by construction the value that "would have been measured".

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bellab/core.hpp"

namespace bellab::realism {

enum class ModelKind : std::uint8_t { LhvSign, CollapseSequential, FileReplay };

std::string_view to_string(ModelKind k) noexcept;

/// Local hidden variable: lambda uniform on [0, 2pi).
struct HiddenVariable {
  double lambda = 0.0;
};

HiddenVariable draw_hidden_variable(std::uint64_t seed, std::uint64_t pair_index);

/// Alice: sign(cos(lambda - theta)); Bob: the negation. sign(0) = +1.
Outcome lhv_outcome(HiddenVariable lambda, Angle theta, Side side);

struct AssignmentBlock {
  Block block;
  std::map<AxisSymbol, OutcomeSequence> sequences;

  const OutcomeSequence& at(AxisSymbol s) const;
};

struct GenerateOptions {
  unsigned threads = 1;
  /// Axes tagged Provenance::Measured; the rest are Counterfactual.
  std::set<AxisSymbol> measured{AxisSymbol::E, AxisSymbol::P};
};

class CounterfactualModel {
 public:
  virtual ~CounterfactualModel() = default;

  virtual ModelKind kind() const noexcept = 0;
  virtual bool supports(AxisSymbol s) const noexcept = 0;

  /// One complete tuple per pair of `block`. Throws ModelError when an axis
  /// of the block is not defined by this model.
  AssignmentBlock generate_block(const Block& block, std::uint64_t seed, const GenerateOptions& options = {}) const;

 protected:
  using Columns = std::map<AxisSymbol, std::vector<std::int8_t>>;
  /// Fill pairs [begin, end) of the block into `columns` (pre-sized to block.count).
  virtual void assign(const Block& block, std::uint64_t seed, std::size_t begin, std::size_t end,
                      Columns& columns) const = 0;
  virtual bool parallel_safe() const noexcept { return true; }
  virtual void validate(const Block& block) const;
};

class LhvSignModel final : public CounterfactualModel {
 public:
  ModelKind kind() const noexcept override { return ModelKind::LhvSign; }
  bool supports(AxisSymbol) const noexcept override { return true; }

 protected:
  void assign(const Block& block, std::uint64_t seed, std::size_t begin, std::size_t end,
              Columns& columns) const override;
};

/// P is measured first; the E-side particle collapses to |-P_i> along P's
/// axis and E, E' are then drawn independently from that state. P' is not
/// defined by this model.
class CollapseSequentialModel final : public CounterfactualModel {
 public:
  ModelKind kind() const noexcept override { return ModelKind::CollapseSequential; }
  bool supports(AxisSymbol s) const noexcept override { return s != AxisSymbol::PPrime; }

 protected:
  void assign(const Block& block, std::uint64_t seed, std::size_t begin, std::size_t end,
              Columns& columns) const override;
  void validate(const Block& block) const override;
};

/// Replay file contents. The header line declares the axes in column order
/// as SYMBOL=RADIANS tokens; each following line holds one pair.
struct ReplayData {
  std::vector<AxisSymbol> order;
  AxisConfig axes;
  std::vector<std::vector<std::int8_t>> columns;  // columns[k][pair], in `order`

  std::size_t pairs() const noexcept { return columns.empty() ? 0 : columns.front().size(); }
};

/// Throws ConfigError on malformed input.
ReplayData parse_replay(std::istream& in);
ReplayData load_replay(const std::string& path);
void write_replay(std::ostream& out, const AssignmentBlock& block);

class FileReplayModel final : public CounterfactualModel {
 public:
  explicit FileReplayModel(ReplayData data) : data_(std::move(data)) {}

  ModelKind kind() const noexcept override { return ModelKind::FileReplay; }
  bool supports(AxisSymbol s) const noexcept override { return data_.axes.has(s); }
  const ReplayData& data() const noexcept { return data_; }

 protected:
  void assign(const Block& block, std::uint64_t seed, std::size_t begin, std::size_t end,
              Columns& columns) const override;
  void validate(const Block& block) const override;

 private:
  ReplayData data_;
};

/// "lhv-sign", "collapse-sequential" or "replay:<path>".
std::unique_ptr<CounterfactualModel> make_model(std::string_view spec);

}  // namespace bellab::realism
