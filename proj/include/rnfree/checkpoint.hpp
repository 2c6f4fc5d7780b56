#pragma once

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rnfree/ints.hpp"

namespace rnfree::ckpt {

struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckpointEntry {
    u64 segment_lo = 0;
    u64 segment_hi = 0;
    std::string summary_json; // cumulative summary after this segment
    u64 records_offset = 0;   // records-file byte size once this segment is flushed
};

// Parses a JSON-lines checkpoint file. Throws CheckpointError naming the line
// and byte offset of the first malformed entry. A missing file yields an
// empty vector.
std::vector<CheckpointEntry> load_checkpoint(const std::string& path);

std::string checkpoint_line(const CheckpointEntry& entry); // without newline

// Paired records + checkpoint sink with resume support. Records are the
// deliverable (byte-stable); the checkpoint makes an interrupted run
// restartable with identical final bytes.
class RecordSink {
  public:
    // Either path may be empty (that half is skipped). When `resume` is set
    // the existing checkpoint is validated against expected_segments and the
    // records file is truncated to the last committed offset.
    RecordSink(std::string records_path, std::string checkpoint_path, bool resume,
               const std::vector<std::pair<u64, u64>>& expected_segments);

    u64 first_pending_segment() const { return first_pending_; }
    // cumulative summary recorded for the last committed segment, if resuming
    const std::optional<std::string>& resumed_summary_json() const { return resumed_summary_; }

    void commit(u64 segment_lo, u64 segment_hi, const std::string& records_blob,
                const std::string& cumulative_summary_json);

  private:
    std::ofstream records_;
    std::ofstream checkpoint_;
    bool have_records_ = false;
    bool have_checkpoint_ = false;
    u64 first_pending_ = 0;
    std::optional<std::string> resumed_summary_;
};

} // namespace rnfree::ckpt
