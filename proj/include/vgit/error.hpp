#pragma once

#include <stdexcept>
#include <string>

namespace vgit {

enum class ErrorKind {
    ZeroVector,
    EmptyFeasibleRegion,
    InvalidInput,
    NotCalabiYau,
    ZeroColumn,
    RankDeficient,
    DegenerateFan,
    IndexOutOfRange,
    NonGenericLinearization,
    NoFlippedStratum,
    NotWallStratum,
    AdjointUnsolvable,
    Internal
};

inline const char* kindName(ErrorKind k) {
    switch (k) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::EmptyFeasibleRegion: return "EmptyFeasibleRegion";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotCalabiYau: return "NotCalabiYau";
    case ErrorKind::ZeroColumn: return "ZeroColumn";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::DegenerateFan: return "DegenerateFan";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonGenericLinearization: return "NonGenericLinearization";
    case ErrorKind::NoFlippedStratum: return "NoFlippedStratum";
    case ErrorKind::NotWallStratum: return "NotWallStratum";
    case ErrorKind::AdjointUnsolvable: return "AdjointUnsolvable";
    case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& msg)
        : std::runtime_error(std::string(kindName(k)) + ": " + msg), kind_(k) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace vgit
