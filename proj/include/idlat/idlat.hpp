/* Copyright (C) 2026 The idlat Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef IDLAT_IDLAT_HPP
#define IDLAT_IDLAT_HPP

#include "cyclic.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "ideal_matrix.hpp"
#include "lattice.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "quotient.hpp"
#include "rational.hpp"
#include "smoothing.hpp"

#endif // IDLAT_IDLAT_HPP
