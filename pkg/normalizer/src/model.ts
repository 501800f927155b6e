/** Encoder-decoder model: the encoder LSTM reads the accented transcription
 * character-wise and hands its final state to the decoder LSTM, which
 * predicts the canonical transcription one character ahead of its input. */
import * as tf from '@tensorflow/tfjs';

export interface ModelConfig {
  hidden: number;
  maxLen: number;
  vocabSize: number;
  seed: number;
}

export interface Seq2Seq {
  training: tf.LayersModel;
  config: ModelConfig;
}

const ENCODER_LSTM = 'encoder_lstm';
const DECODER_LSTM = 'decoder_lstm';
const OUTPUT_DENSE = 'output_dense';

export function buildTrainingModel(config: ModelConfig): tf.LayersModel {
  const { hidden, maxLen, vocabSize, seed } = config;
  const encoderInputs = tf.input({ shape: [maxLen, vocabSize], name: 'encoder_input' });
  const encoderLstm = tf.layers.lstm({
    units: hidden,
    returnState: true,
    name: ENCODER_LSTM,
    kernelInitializer: tf.initializers.glorotUniform({ seed }),
    recurrentInitializer: tf.initializers.orthogonal({ seed: seed + 1 }),
  });
  const [, stateH, stateC] = encoderLstm.apply(encoderInputs) as tf.SymbolicTensor[];

  const decoderInputs = tf.input({ shape: [maxLen, vocabSize], name: 'decoder_input' });
  const decoderLstm = tf.layers.lstm({
    units: hidden,
    returnSequences: true,
    returnState: true,
    name: DECODER_LSTM,
    kernelInitializer: tf.initializers.glorotUniform({ seed: seed + 2 }),
    recurrentInitializer: tf.initializers.orthogonal({ seed: seed + 3 }),
  });
  const [decoderSeq] = decoderLstm.apply(decoderInputs, {
    initialState: [stateH, stateC],
  } as tf.SymbolicTensor[] | any) as tf.SymbolicTensor[];
  const dense = tf.layers.dense({
    units: vocabSize,
    activation: 'softmax',
    name: OUTPUT_DENSE,
    kernelInitializer: tf.initializers.glorotUniform({ seed: seed + 4 }),
  });
  const outputs = dense.apply(decoderSeq) as tf.SymbolicTensor;
  return tf.model({
    inputs: [encoderInputs, decoderInputs],
    outputs,
    name: 'accent_normalizer',
  });
}

export interface InferenceModels {
  encoder: tf.LayersModel;
  decoderStep: tf.LayersModel;
  hidden: number;
}

/** Rebuild greedy-decoding models from a (possibly reloaded) training model. */
export function buildInferenceModels(training: tf.LayersModel, hidden: number): InferenceModels {
  const encoderInputs = training.inputs[0] as tf.SymbolicTensor;
  const encoderLstm = training.getLayer(ENCODER_LSTM);
  const [, encH, encC] = encoderLstm.apply(encoderInputs) as tf.SymbolicTensor[];
  const encoder = tf.model({ inputs: encoderInputs, outputs: [encH, encC] });

  const vocabSize = (training.inputs[1].shape as number[])[2]!;
  const stepInput = tf.input({ shape: [1, vocabSize], name: 'decoder_step_input' });
  const stepH = tf.input({ shape: [hidden], name: 'decoder_state_h' });
  const stepC = tf.input({ shape: [hidden], name: 'decoder_state_c' });
  const decoderLstm = training.getLayer(DECODER_LSTM);
  const [stepSeq, nextH, nextC] = decoderLstm.apply(stepInput, {
    initialState: [stepH, stepC],
  } as any) as tf.SymbolicTensor[];
  const dense = training.getLayer(OUTPUT_DENSE);
  const probs = dense.apply(stepSeq) as tf.SymbolicTensor;
  const decoderStep = tf.model({
    inputs: [stepInput, stepH, stepC],
    outputs: [probs, nextH, nextC],
  });
  return { encoder, decoderStep, hidden };
}
