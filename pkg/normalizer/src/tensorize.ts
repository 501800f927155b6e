/** One-hot tensor packing with teacher-forcing offsets: the decoder input is
 * the target shifted right behind a start marker, the decoder target is the
 * target followed by the end marker. */
import * as tf from '@tensorflow/tfjs';

import { Sample } from './data';
import { Vocab } from './vocab';

export interface TensorSet {
  encoderInputs: tf.Tensor3D;
  decoderInputs: tf.Tensor3D;
  targets: tf.Tensor3D;
}

export function tensorize(samples: Sample[], vocab: Vocab, maxLen: number): TensorSet {
  const n = samples.length;
  const enc = tf.buffer([n, maxLen, vocab.size]);
  const dec = tf.buffer([n, maxLen, vocab.size]);
  const targets = tf.buffer([n, maxLen, vocab.size]);
  samples.forEach((sample, row) => {
    const src = vocab.encode(sample.accented);
    const dst = [vocab.sos, ...vocab.encode(sample.canonical), vocab.eos];
    if (src.length > maxLen || dst.length > maxLen + 1) {
      throw new Error(`sample exceeds maxLen=${maxLen}: ${sample.accented}`);
    }
    src.forEach((id, t) => enc.set(1, row, t, id));
    for (let t = src.length; t < maxLen; t++) enc.set(1, row, t, vocab.pad);
    dst.forEach((id, t) => {
      if (t < maxLen) dec.set(1, row, t, id);
      if (t > 0 && t - 1 < maxLen) targets.set(1, row, t - 1, id);
    });
    for (let t = dst.length; t < maxLen; t++) dec.set(1, row, t, vocab.pad);
    for (let t = Math.max(dst.length - 1, 0); t < maxLen; t++) targets.set(1, row, t, vocab.pad);
  });
  return {
    encoderInputs: enc.toTensor() as tf.Tensor3D,
    decoderInputs: dec.toTensor() as tf.Tensor3D,
    targets: targets.toTensor() as tf.Tensor3D,
  };
}

export function disposeTensorSet(set: TensorSet): void {
  set.encoderInputs.dispose();
  set.decoderInputs.dispose();
  set.targets.dispose();
}
