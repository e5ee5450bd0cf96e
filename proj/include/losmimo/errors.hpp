// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef LOSMIMO_ERRORS_HPP
#define LOSMIMO_ERRORS_HPP

#include <stdexcept>

namespace losmimo {

// Invalid argument to an operation (non-positive wavelength, index out of range, ...)
class DomainError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A configured resource limit would be exceeded (matrix budget)
class ResourceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Numerical routine failed (e.g. SVD did not converge)
class ComputationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace losmimo

#endif
