#include "rnfree/checkpoint.hpp"

#include <filesystem>

#include <json.hpp>

namespace rnfree::ckpt {

std::vector<CheckpointEntry> load_checkpoint(const std::string& path) {
    std::vector<CheckpointEntry> out;
    std::ifstream in(path, std::ios::binary);
    if (!in.is_open()) return out;
    std::string line;
    u64 line_no = 0;
    u64 byte_offset = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const u64 line_start = byte_offset;
        byte_offset += line.size() + 1;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
            CheckpointEntry e;
            e.segment_lo = j.at("segment_lo").get<u64>();
            e.segment_hi = j.at("segment_hi").get<u64>();
            e.summary_json = j.at("summary_partial").dump();
            e.records_offset = j.at("records_offset").get<u64>();
            out.push_back(std::move(e));
        } catch (const nlohmann::json::exception& ex) {
            throw CheckpointError("corrupted checkpoint " + path + " at line " +
                                  std::to_string(line_no) + " (byte offset " +
                                  std::to_string(line_start) + "): " + ex.what());
        }
    }
    return out;
}

std::string checkpoint_line(const CheckpointEntry& entry) {
    return "{\"segment_lo\":" + std::to_string(entry.segment_lo) +
           ",\"segment_hi\":" + std::to_string(entry.segment_hi) +
           ",\"summary_partial\":" + entry.summary_json +
           ",\"records_offset\":" + std::to_string(entry.records_offset) + "}";
}

RecordSink::RecordSink(std::string records_path, std::string checkpoint_path, bool resume,
                       const std::vector<std::pair<u64, u64>>& expected_segments) {
    have_records_ = !records_path.empty();
    have_checkpoint_ = !checkpoint_path.empty();

    u64 resume_offset = 0;
    if (resume) {
        if (!have_checkpoint_) throw CheckpointError("resume requested without a checkpoint path");
        const auto entries = load_checkpoint(checkpoint_path);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i >= expected_segments.size() || entries[i].segment_lo != expected_segments[i].first ||
                entries[i].segment_hi != expected_segments[i].second)
                throw CheckpointError("corrupted checkpoint " + checkpoint_path + ": entry " +
                                      std::to_string(i + 1) +
                                      " does not match the configured segment layout");
        }
        first_pending_ = entries.size();
        if (!entries.empty()) {
            resumed_summary_ = entries.back().summary_json;
            resume_offset = entries.back().records_offset;
        }
    }

    if (have_records_) {
        namespace fs = std::filesystem;
        if (resume) {
            if (fs::exists(records_path)) {
                if (fs::file_size(records_path) < resume_offset)
                    throw CheckpointError("records file " + records_path +
                                          " is shorter than the checkpointed offset");
                fs::resize_file(records_path, resume_offset);
            } else if (resume_offset != 0) {
                throw CheckpointError("records file " + records_path +
                                      " is missing but the checkpoint expects " +
                                      std::to_string(resume_offset) + " bytes");
            }
            records_.open(records_path, std::ios::binary | std::ios::app);
        } else {
            records_.open(records_path, std::ios::binary | std::ios::trunc);
        }
        if (!records_.is_open())
            throw CheckpointError("cannot open records file " + records_path);
    }
    if (have_checkpoint_) {
        checkpoint_.open(checkpoint_path,
                         std::ios::binary | (resume ? std::ios::app : std::ios::trunc));
        if (!checkpoint_.is_open())
            throw CheckpointError("cannot open checkpoint file " + checkpoint_path);
    }
}

void RecordSink::commit(u64 segment_lo, u64 segment_hi, const std::string& records_blob,
                        const std::string& cumulative_summary_json) {
    u64 offset = 0;
    if (have_records_) {
        records_.write(records_blob.data(), static_cast<std::streamsize>(records_blob.size()));
        records_.flush();
        if (!records_) throw CheckpointError("write to records file failed");
        offset = static_cast<u64>(records_.tellp());
    }
    if (have_checkpoint_) {
        CheckpointEntry e{segment_lo, segment_hi, cumulative_summary_json, offset};
        checkpoint_ << checkpoint_line(e) << '\n';
        checkpoint_.flush();
        if (!checkpoint_) throw CheckpointError("write to checkpoint file failed");
    }
}

} // namespace rnfree::ckpt
